use thiserror::Error;

/// Errors raised by the evaluators, constructions and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input (bad index, bad file, violated precondition).
    #[error("input error: {0}")]
    Input(String),
    /// A numeric parameter outside the supported domain.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The instance exceeds an enumeration budget.
    #[error("size error: {0}")]
    Size(String),
    /// No gadget plan found within the size budget.
    #[error("synthesis failure: {0}")]
    Synthesis(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn size(msg: impl Into<String>) -> Self {
        Error::Size(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
