use thiserror::Error;

use crate::solve::SolveReport;

/// Errors produced by maps, solvers, and problem builders.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector or matrix had a different length than the operation expected.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The residual-gap denominator vanished with no regularisation to fall
    /// back on, so the contraction-factor fit has no solution.
    #[error("singular fit: residual gap is zero and theta = 0")]
    SingularFit,

    /// A parameter was outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An input left the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix factorisation could not be completed (rank deficiency).
    #[error("factorisation failed: {0}")]
    Factorization(String),

    /// A freshly built problem failed its fixed-point consistency check.
    #[error("problem construction failed: {0}")]
    Construction(String),

    /// The iteration produced non-finite values or runaway residual growth.
    /// Carries the partial report accumulated up to the abort.
    #[error("{} diverged: residual {} after {} map evaluations",
            .0.method_name, .0.final_residual_inf, .0.total_evals)]
    Diverged(Box<SolveReport>),
}

pub type Result<T> = std::result::Result<T, Error>;
