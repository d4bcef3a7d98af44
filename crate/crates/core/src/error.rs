use thiserror::Error;

/// Errors raised by the engine. Messages are single-line so the CLI can
/// print them verbatim.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("unknown Cartan type {0:?}")]
    UnknownType(String),
    #[error("non-finite type: {0}")]
    NonFiniteType(String),
    #[error("Wrong Triangulation!")]
    WrongTriangulation,
    #[error("no braid move: {0}")]
    NoBraidMove(String),
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
