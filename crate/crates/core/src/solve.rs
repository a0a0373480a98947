//! Solver configuration and the report every solver returns.

use crate::error::{Error, Result};
use crate::map::residual_inf_norm;

/// Shared solve parameters.
///
/// `omega` is only read by the relaxed solver and `depth` only by Anderson;
/// the other fields govern every method. The defaults are the benchmark
/// protocol used throughout: `tol = 1e-8`, a budget of `1e6` map
/// evaluations, and `theta = 1e-9`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveConfig {
    /// Stopping threshold on the max-norm residual.
    pub tol: f64,
    /// Budget on map evaluations.
    pub max_evals: u64,
    /// Regularisation strength for the contraction-factor fit and the
    /// Anderson least-squares ridge.
    pub theta: f64,
    /// Relaxation factor for the relaxed sweep.
    pub omega: f64,
    /// Anderson window depth `m`.
    pub depth: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { tol: 1e-8, max_evals: 1_000_000, theta: 1e-9, omega: 1.0, depth: 2 }
    }
}

impl SolveConfig {
    pub fn new(tol: f64, max_evals: u64) -> Self {
        Self { tol, max_evals, ..Self::default() }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_max_evals(mut self, max_evals: u64) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn with_theta(mut self, theta: f64) -> Self {
        self.theta = theta;
        self
    }

    pub fn with_omega(mut self, omega: f64) -> Self {
        self.omega = omega;
        self
    }

    pub fn with_depth(mut self, depth: usize) -> Self {
        self.depth = depth;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidParameter(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_evals < 2 {
            return Err(Error::InvalidParameter(format!(
                "max_evals must be at least 2, got {}",
                self.max_evals
            )));
        }
        if !(self.theta >= 0.0 && self.theta.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "theta must be non-negative, got {}",
                self.theta
            )));
        }
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "omega must be positive, got {}",
                self.omega
            )));
        }
        if self.depth < 1 {
            return Err(Error::InvalidParameter("depth must be at least 1".into()));
        }
        Ok(())
    }
}

/// Ordered (evaluations used, max-norm residual) samples recorded while a
/// solve runs. Residual histories are plotted against evaluations, so the
/// evaluation count is the x-axis unit.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResidualTrace {
    samples: Vec<(u64, f64)>,
}

impl ResidualTrace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a sample. Evaluation counts must strictly increase and
    /// residuals must be finite and non-negative.
    pub fn push(&mut self, evals_used: u64, residual_inf: f64) {
        debug_assert!(residual_inf.is_finite() && residual_inf >= 0.0);
        debug_assert!(self.samples.last().is_none_or(|&(e, _)| evals_used > e));
        self.samples.push((evals_used, residual_inf));
    }

    pub fn samples(&self) -> &[(u64, f64)] {
        &self.samples
    }

    pub fn last(&self) -> Option<(u64, f64)> {
        self.samples.last().copied()
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Outcome of one solver run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub method_name: String,
    pub converged: bool,
    /// Map evaluations consumed by this run; equals the handle's counter
    /// delta over the solve.
    pub total_evals: u64,
    pub trace: ResidualTrace,
    pub final_iterate: Vec<f64>,
    /// The residual that ended the run (below `tol` iff `converged`).
    pub final_residual_inf: f64,
    /// Max-norm distance to a reference fixed point, when one was supplied.
    pub final_error_inf: Option<f64>,
}

impl SolveReport {
    /// Fills in `final_error_inf` against a known fixed point.
    pub fn with_reference(mut self, x_star: &[f64]) -> Result<Self> {
        self.final_error_inf = Some(residual_inf_norm(&self.final_iterate, x_star)?);
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_the_benchmark_protocol() {
        let cfg = SolveConfig::default();
        assert_eq!(cfg.tol, 1e-8);
        assert_eq!(cfg.max_evals, 1_000_000);
        assert_eq!(cfg.theta, 1e-9);
        cfg.validate().unwrap();
    }

    #[test]
    fn validate_rejects_bad_parameters() {
        assert!(SolveConfig::default().with_tol(0.0).validate().is_err());
        assert!(SolveConfig::default().with_tol(-1.0).validate().is_err());
        assert!(SolveConfig::default().with_max_evals(1).validate().is_err());
        assert!(SolveConfig::default().with_theta(-1e-9).validate().is_err());
        assert!(SolveConfig::default().with_omega(0.0).validate().is_err());
        assert!(SolveConfig::default().with_depth(0).validate().is_err());
    }

    #[test]
    fn trace_records_in_order() {
        let mut trace = ResidualTrace::new();
        trace.push(1, 0.5);
        trace.push(2, 0.25);
        assert_eq!(trace.samples(), &[(1, 0.5), (2, 0.25)]);
        assert_eq!(trace.last(), Some((2, 0.25)));
        assert_eq!(trace.len(), 2);
    }

    #[test]
    fn reference_error_is_the_max_norm_distance() {
        let report = SolveReport {
            method_name: "test".into(),
            converged: true,
            total_evals: 1,
            trace: ResidualTrace::new(),
            final_iterate: vec![1.0, 2.0],
            final_residual_inf: 0.0,
            final_error_inf: None,
        };
        let report = report.with_reference(&[1.5, 2.0]).unwrap();
        assert_eq!(report.final_error_inf, Some(0.5));
    }
}
