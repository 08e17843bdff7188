use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WildError {
    #[error("cannot lower an element from level {level} to level {target}")]
    LevelBelow { level: usize, target: usize },
    #[error("{0}")]
    Shape(String),
    #[error("ideal {ideal} lives in {expected}, element is in {found}")]
    AmbientMismatch {
        ideal: String,
        expected: &'static str,
        found: &'static str,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error("element needs level {level}, above the truncation level {truncation}")]
    AboveTruncation { level: usize, truncation: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
