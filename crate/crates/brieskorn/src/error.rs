use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A monomial or vector does not match the variable layout of the ordering.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The zero polynomial has no leading term.
    #[error("zero polynomial has no leading data")]
    ZeroPolynomial,

    /// An operation received an empty generator list.
    #[error("empty generator list")]
    EmptyInput,

    /// The input polynomial has a nonzero constant or linear part.
    #[error("no critical point at the origin: {0}")]
    NotACriticalPoint(String),

    /// The critical point is not isolated (the staircase is not cofinite).
    #[error("non-isolated singularity: {0}")]
    NonIsolatedSingularity(String),

    /// Supplied weights violate negativity or the family weight constraint.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// Malformed input that is not a parse error (bad flags, bad basis order, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Text input could not be parsed; `position` is a byte offset.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}
