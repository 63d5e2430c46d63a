//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An index has the wrong parity for the requested formula.
    #[error("parity error: {0}")]
    Parity(String),

    /// An iterative computation did not converge.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// A documented precondition of the operation was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A computed value is numerically unusable (cancellation, degeneracy).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Two internal routes disagree beyond tolerance; indicates a bug.
    #[error("internal consistency violation: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
