use thiserror::Error;

/// Error type shared by all modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Structurally invalid input: bad grids, shape mismatches, empty
    /// supports, parameters outside their domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Input is well-formed but the operation's mathematical precondition
    /// fails on it (e.g. a positivity criterion evaluated on a zero value).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exact enumeration would exceed the configured size cap.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
