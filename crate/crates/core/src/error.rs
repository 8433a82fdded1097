use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps `Parse`, `Argument` and `Precondition` to exit code 2 and
/// `Capacity` to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size bound of the representation or of an algorithm was exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An argument is outside the documented domain of an operation.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A mathematical precondition of a claim or formula does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Malformed graph expression.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Malformed graph6 text.
    #[error("graph6 decode error: {0}")]
    Graph6(String),
}

impl Error {
    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
