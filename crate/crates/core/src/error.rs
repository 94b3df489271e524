use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KhomError {
    /// Malformed group, representation or degree input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Group order above the configured bound.
    #[error("group order {order} exceeds the size bound {bound}")]
    SizeBound { order: u64, bound: u64 },
    /// A precondition on the arguments does not hold.
    #[error("invalid argument: {0}")]
    Invalid(String),
    /// An internal cross-check failed (oracle mismatch, span failure, ill-defined map).
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, KhomError>;
