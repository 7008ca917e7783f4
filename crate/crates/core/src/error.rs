use thiserror::Error;

use crate::algebra::BasisTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed stack-partition text; `column` is 1-based.
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: BasisTag, found: BasisTag },

    #[error("unknown multiplicity pattern `{0}`")]
    UnknownPattern(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown basis `{0}`")]
    UnknownBasis(String),

    /// Raised when a transition matrix fails to invert. The bases are bases of
    /// each graded piece, so this always indicates a bug.
    #[error("internal error: {from}->M matrix in degree {degree} is singular")]
    Singular { from: BasisTag, degree: u32 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
