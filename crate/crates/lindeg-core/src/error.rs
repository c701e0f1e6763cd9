//! Shared error type.
//!
//! The variants mirror the CLI exit-code contract: usage and domain errors
//! map to exit code 2, internal-consistency failures to exit code 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed arguments or input data.
    #[error("usage error: {0}")]
    Usage(String),

    /// Structurally valid input outside the mathematical domain of an
    /// operation (e.g. the all-infinity vector, a rank-zero deletion).
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration exceeded its node or time budget. Carries a partial
    /// progress report.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// A violated internal invariant. By the theorems implemented here
    /// these are always library bugs, never valid states.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
