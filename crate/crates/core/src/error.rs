use thiserror::Error;

/// Errors raised by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be parsed; `token` is the offending fragment.
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    /// A value does not belong to the structure it was used with.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this kind of input.
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A grading descriptor violates one of its defining conditions.
    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    /// A hypothesis of a construction does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A certificate produced by a decision procedure failed its re-check.
    #[error("certificate check failed: {0}")]
    CertificateFailed(String),

    #[error("index ({row}, {col}) out of range for n = {n}")]
    IndexOutOfRange { row: usize, col: usize, n: usize },
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
