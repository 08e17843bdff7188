use refmon_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate prime `{0}`")]
    Duplicate(String),
    #[error("unknown prime `{0}`")]
    UnknownPrime(String),
    #[error("not antisymmetric: {0} and {1} are related both ways")]
    Antisymmetry(String, String),
    #[error("not transitive: {0} below {1} below {2}, but {0} is not below {2}")]
    Transitivity(String, String, String),
    #[error("element has {found} coefficients, the poset has {expected} primes")]
    Mismatch { expected: usize, found: usize },
    #[error("a finite subsystem needs a nonempty set of primes")]
    EmptySubset,
    #[error(transparent)]
    Core(#[from] CoreError),
}
