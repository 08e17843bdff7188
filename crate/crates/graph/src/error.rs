use refmon_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("separation at `{vertex}` is not a partition of its outgoing arrows: {reason}")]
    NotPartition { vertex: String, reason: String },
    #[error("emitter `{vertex}`: {reason}")]
    Emitter { vertex: String, reason: String },
    #[error("no built-in graph `{0}`; expected E0C0, EC(N) or EbarCbar(N)")]
    UnknownBuiltin(String),
    #[error("invalid triple: {0}")]
    Triple(String),
    #[error("z-cap must be at least 1")]
    ZCap,
    #[error("depth must be at least 1")]
    Depth,
    #[error(transparent)]
    Core(#[from] CoreError),
}
