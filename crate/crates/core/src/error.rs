use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Polynomials or generators from incompatible generator sets, or a
    /// generator that is missing from the set it is looked up in.
    #[error("context error: {0}")]
    Context(String),
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An invalid theory or gauge configuration.
    #[error("configuration error: {0}")]
    Configuration(String),
    /// An internal cross-check between two computations failed.
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn context(msg: impl Into<String>) -> Self {
        Error::Context(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
