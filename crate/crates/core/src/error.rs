use thiserror::Error;

/// Errors raised by the numerical and network routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A value lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Incompatible arguments (dimension mismatch, cut not matching the network, ...).
    #[error("usage error: {0}")]
    Usage(String),
    /// Input document or network violates the schema or a structural invariant.
    #[error("validation error: {0}")]
    Validation(String),
    /// Exhaustive enumeration would exceed the configured free-node limit.
    #[error(
        "capacity error: {free} free nodes exceed the enumeration limit of {limit}; use the max-flow method"
    )]
    Capacity { free: usize, limit: usize },
    /// Operation not available for this channel kind.
    #[error("unsupported channel kind `{0}`")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
