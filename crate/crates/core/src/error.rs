use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arithmetic outside the domain of an operation (e.g. inverting zero).
    #[error("domain error: {0}")]
    Domain(String),

    /// Malformed arguments: out-of-range labels, length mismatches, mixed fields.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    /// An exhaustive scan would exceed the configured enumeration bound.
    #[error("resource limit: {what} needs {needed} items, bound is {bound}")]
    Resource { what: String, needed: String, bound: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("construction failed: {0}")]
    ConstructionFailure(String),

    #[error("not found after {trials} trials: {what}")]
    NotFound { what: String, trials: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{path}: {msg}")]
    Io { path: String, msg: String },

    /// A self-check tripped. Indicates a bug, never expected in normal use.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
