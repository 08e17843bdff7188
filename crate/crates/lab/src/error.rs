use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
}
