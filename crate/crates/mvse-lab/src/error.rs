//! Library-wide error type.
//!
//! Errors are reserved for malformed input and violated preconditions.
//! Sound negative answers (a matrix that is not totally unimodular, a
//! zonotope refused membership, a failed tiling verdict) are ordinary
//! values of the corresponding result types, not errors.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must agree in shape do not.
    #[error("shape mismatch: expected {expected}, got {got}")]
    Shape { expected: String, got: String },

    /// A square matrix that must be invertible is singular.
    #[error("singular matrix: {context}")]
    Singular { context: String },

    /// A matrix or generator set does not have the rank an operation needs.
    #[error("rank deficient: rank {rank} < {needed} ({context})")]
    RankDeficient {
        rank: usize,
        needed: usize,
        context: String,
    },

    /// An entry lies outside the set an operation requires.
    #[error("entry ({row},{col}) = {value} outside allowed set {allowed}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: String,
        allowed: String,
    },

    /// The instance is larger than the documented size contract.
    #[error("size limit exceeded: {context}")]
    SizeLimit { context: String },

    /// The operation only supports certain dimensions.
    #[error("unsupported dimension {d}: {context}")]
    UnsupportedDimension { d: usize, context: String },

    /// A documented precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text could not be parsed as the expected object.
    #[error("parse error: {0}")]
    Parse(String),

    /// Reading an input or writing an output failed.
    #[error("io error: {0}")]
    Io(String),

    /// A sampling or search budget was exhausted without a usable outcome.
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
