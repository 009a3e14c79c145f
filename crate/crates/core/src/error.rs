use thiserror::Error;

/// Errors raised by every module; the CLI maps each kind to an exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WpsError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("domain error: {0}")]
    Domain(String),
}

impl WpsError {
    pub fn parse(msg: impl Into<String>) -> Self {
        WpsError::Parse(msg.into())
    }
    pub fn budget(msg: impl Into<String>) -> Self {
        WpsError::Budget(msg.into())
    }
    pub fn invariant(msg: impl Into<String>) -> Self {
        WpsError::Invariant(msg.into())
    }
    pub fn domain(msg: impl Into<String>) -> Self {
        WpsError::Domain(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            WpsError::Parse(_) => 2,
            WpsError::Budget(_) => 3,
            WpsError::Invariant(_) | WpsError::Domain(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, WpsError>;
