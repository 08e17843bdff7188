use refmon_core::{CoreError, ParseError};
use refmon_graph::GraphError;
use refmon_lab::LabError;
use refmon_primitive::PosetError;
use refmon_wild::WildError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    File { path: String, message: String },
    #[error(
        "unknown monoid `{0}`; expected M(N), Mbar(N), trunc:M(N), trunc:Mbar(N), M0, E0C0, \
         EC(N), EbarCbar(N), Z(n), P<n>_<mask> or a file"
    )]
    UnknownMonoid(String),
    #[error("cannot parse term `{term}`: {reason}")]
    Term { term: String, reason: String },
    #[error("{0}")]
    Usage(String),
    #[error("presentation: {0}")]
    Presentation(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Wild(#[from] WildError),
    #[error(transparent)]
    Lab(#[from] LabError),
}
