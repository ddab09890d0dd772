use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A set violates the constructor invariants (empty, non-positive,
    /// duplicate, or non-integer where integers are required).
    #[error("invalid set: {0}")]
    InvalidSet(String),

    /// Two objects that must share an order do not.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A scalar argument is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A Cholesky pivot fell below the positive-definiteness threshold.
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// The Jacobi sweep limit was exhausted before the off-diagonal norm
    /// dropped under the convergence threshold.
    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),

    /// The set shape has no closed-form spectrum; use the numeric solver.
    #[error("unsupported set shape: {0}")]
    UnsupportedSet(String),

    /// An internal exactness invariant was violated (e.g. an interpolation
    /// division left a remainder). Always a bug, never a caller error.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// A property that the library promises to verify does not hold.
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
