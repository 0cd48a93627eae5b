use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input data (shapes, fields, presentations).
    #[error("input error: {0}")]
    Input(String),
    /// A hypothesis of the requested operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An internal consistency check failed; signals corrupted input or a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// The operation is not available for this kind of data.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvariantViolation(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
