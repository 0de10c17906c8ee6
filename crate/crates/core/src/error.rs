use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An integer argument lies outside the supported range.
    #[error("range error: {0}")]
    Range(String),
    /// Parameters that cannot describe a valid object.
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    /// The operation is undefined for the given input (e.g. `inv(0)`, complement over q != 2).
    #[error("domain error: {0}")]
    Domain(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// A configured size or enumeration budget would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
