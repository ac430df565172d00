use thiserror::Error;

/// Errors produced by the library.
///
/// The variants line up with the CLI exit-code contract: `Input` maps to a
/// malformed-input exit, `Domain` to a verification/domain failure,
/// `Resource` to a resource-limit exit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {message}")]
    Resource {
        message: String,
        nodes_expanded: u64,
    },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
