//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by catalog lookups, special-function evaluation and
/// series analysis.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// A constructor or operation was handed a parameter outside its
    /// admissible set (bad `q`, bad node count, bad schedule).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An argument fell outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An argument exceeded the supported evaluation range.
    #[error("range error: {0}")]
    Range(String),

    /// Two routes that must agree by theory produced different answers.
    /// Seeing this indicates an implementation bug, not a property of the
    /// input.
    #[error("internal consistency error: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
