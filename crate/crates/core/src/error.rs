//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand dimensions do not match.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// An argument violates a precondition.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// The request exceeds the dense, desk-scale budget of this crate.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A caller broke an API contract (e.g. conjugating a non-unital triple).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The eigensolver did not converge within its sweep cap.
    #[error("eigensolver did not converge: off-diagonal residual {residual:e}")]
    NonConvergence { residual: f64 },

    /// The distance solver could not certify a bracket of the requested width.
    #[error("solver diagnostic: bracket [{lower}, {upper}] wider than tol {tol} ({detail})")]
    SolverDiagnostic {
        lower: f64,
        upper: f64,
        tol: f64,
        detail: String,
    },
}

impl Error {
    pub fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
