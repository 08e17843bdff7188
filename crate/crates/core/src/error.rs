use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("generator names must be non-empty")]
    EmptyGeneratorName,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("word uses generator index {index} but the generator set has {size} generators")]
    GeneratorMismatch { index: usize, size: usize },
    #[error("certificate `{certificate}` is over presentation `{expected}`, not `{found}`")]
    WrongPresentation {
        certificate: String,
        expected: String,
        found: String,
    },
    #[error("certificate needs {expected} generator images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of generator `{generator}` is not in the target monoid: {reason}")]
    BadImage { generator: String, reason: String },
    #[error("relation {index} ({relation}) violated: {lhs} != {rhs}")]
    RelationViolated {
        index: usize,
        relation: String,
        lhs: String,
        rhs: String,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
