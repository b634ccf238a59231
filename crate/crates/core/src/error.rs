use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("index {0} out of range")]
    Index(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("singular: {0}")]
    Singular(String),
    #[error("irrational parameter: {0}")]
    Irrational(String),
    #[error("construction failed: {0}")]
    Construct(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
