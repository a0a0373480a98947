//! Fixed-point solvers: the three-point polynomial accelerator and the
//! Picard, relaxed-sweep, and Anderson baselines.
//!
//! All solvers share the same contract: they consume map evaluations against
//! the handle's counter, record one residual sample per fresh residual, stop
//! when the max-norm residual drops below `tol` or the evaluation budget is
//! exhausted, and abort with [`Error::Diverged`] when iterates go non-finite
//! or the residual grows past [`GROWTH_LIMIT`] times its first recorded
//! value.

mod anderson;
mod basic;
mod tpa;

pub use anderson::{anderson_solve, AndersonHistory};
pub use basic::{picard_solve, relaxed_solve};
pub use tpa::{
    aitken_step, anderson2_double_blend, error_polynomial, optimal_coefficients, tpa_blend,
    tpa_solve, tpa_weight,
};

use crate::error::{Error, Result};
use crate::solve::{ResidualTrace, SolveReport};

/// Residual growth factor beyond which a run is declared divergent.
pub const GROWTH_LIMIT: f64 = 1e12;

/// Trace and divergence bookkeeping shared by every solver.
struct RunState {
    method: &'static str,
    trace: ResidualTrace,
    first_residual: Option<f64>,
}

impl RunState {
    fn new(method: &'static str) -> Self {
        Self { method, trace: ResidualTrace::new(), first_residual: None }
    }

    /// Records a fresh residual sample and applies the divergence guard.
    ///
    /// Finite residuals (even runaway ones) are kept in the trace so a
    /// divergent run still reports its last observable state.
    fn record(&mut self, evals: u64, residual: f64, iterate: &[f64]) -> Result<()> {
        if residual.is_finite() {
            self.trace.push(evals, residual);
        }
        let first = *self.first_residual.get_or_insert(residual);
        let exploded =
            !residual.is_finite() || (first > 0.0 && residual > GROWTH_LIMIT * first);
        if exploded || iterate.iter().any(|v| !v.is_finite()) {
            let last_finite =
                self.trace.last().map(|(_, r)| r).unwrap_or(f64::INFINITY);
            let report = self.make_report(false, evals, iterate.to_vec(), last_finite);
            return Err(Error::Diverged(Box::new(report)));
        }
        Ok(())
    }

    fn make_report(
        &self,
        converged: bool,
        total_evals: u64,
        final_iterate: Vec<f64>,
        final_residual_inf: f64,
    ) -> SolveReport {
        SolveReport {
            method_name: self.method.to_string(),
            converged,
            total_evals,
            trace: self.trace.clone(),
            final_iterate,
            final_residual_inf,
            final_error_inf: None,
        }
    }

    fn finish(
        self,
        converged: bool,
        total_evals: u64,
        final_iterate: Vec<f64>,
        final_residual_inf: f64,
    ) -> SolveReport {
        SolveReport {
            method_name: self.method.to_string(),
            converged,
            total_evals,
            trace: self.trace,
            final_iterate,
            final_residual_inf,
            final_error_inf: None,
        }
    }
}
