//! Plain Picard iteration and the relaxed sweep `x <- (1-w) x + w T(x)`.

use super::RunState;
use crate::error::Result;
use crate::map::{residual_inf_norm, FixedPointMap};
use crate::solve::{SolveConfig, SolveReport};

/// Plain fixed-point iteration `x <- T(x)`, one evaluation per step.
pub fn picard_solve(
    map: &mut FixedPointMap,
    x0: &[f64],
    cfg: &SolveConfig,
) -> Result<SolveReport> {
    relaxation_loop(map, x0, cfg, 1.0, "picard")
}

/// Relaxed sweep `x <- (1-omega) x + omega T(x)` with `omega = cfg.omega`.
///
/// The convergence test uses the un-relaxed residual `||T(x) - x||_inf`, so
/// `omega = 1` reproduces [`picard_solve`] exactly, trace included. Values
/// in `(0, 2]` are the useful range; larger factors are accepted but tend to
/// trip the divergence guard.
pub fn relaxed_solve(
    map: &mut FixedPointMap,
    x0: &[f64],
    cfg: &SolveConfig,
) -> Result<SolveReport> {
    relaxation_loop(map, x0, cfg, cfg.omega, "relaxed")
}

fn relaxation_loop(
    map: &mut FixedPointMap,
    x0: &[f64],
    cfg: &SolveConfig,
    omega: f64,
    method: &'static str,
) -> Result<SolveReport> {
    cfg.validate()?;
    let mut state = RunState::new(method);
    let mut x = x0.to_vec();
    let mut evals = 0u64;
    loop {
        let tx = map.evaluate(&x)?;
        evals += 1;
        let residual = residual_inf_norm(&x, &tx)?;
        state.record(evals, residual, &tx)?;
        if residual < cfg.tol {
            return Ok(state.finish(true, evals, tx, residual));
        }
        if evals >= cfg.max_evals {
            return Ok(state.finish(false, evals, tx, residual));
        }
        if omega == 1.0 {
            x = tx;
        } else {
            for (xi, ti) in x.iter_mut().zip(&tx) {
                *xi = (1.0 - omega) * *xi + omega * ti;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn affine_map() -> FixedPointMap {
        FixedPointMap::new(1, |x: &[f64]| vec![0.5 * x[0] + 1.0])
    }

    #[test]
    fn picard_geometric_decay_count() {
        // residual after k evaluations is 2^(1-k); first below 1e-8 at k = 28
        let mut map = affine_map();
        let report = picard_solve(&mut map, &[0.0], &SolveConfig::default()).unwrap();
        assert!(report.converged);
        assert_eq!(report.total_evals, 28);
        assert_eq!(map.eval_count(), 28);
        assert!((report.final_iterate[0] - 2.0).abs() < 1e-7);
    }

    #[test]
    fn picard_fixed_point_start_takes_one_evaluation() {
        let mut map = affine_map();
        let report = picard_solve(&mut map, &[2.0], &SolveConfig::default()).unwrap();
        assert!(report.converged);
        assert_eq!(report.total_evals, 1);
        assert_eq!(report.final_residual_inf, 0.0);
    }

    #[test]
    fn relaxed_with_unit_omega_matches_picard_exactly() {
        let cfg = SolveConfig::default().with_omega(1.0);
        let mut m1 = affine_map();
        let mut m2 = affine_map();
        let picard = picard_solve(&mut m1, &[0.25], &cfg).unwrap();
        let relaxed = relaxed_solve(&mut m2, &[0.25], &cfg).unwrap();
        assert_eq!(picard.total_evals, relaxed.total_evals);
        assert_eq!(picard.trace, relaxed.trace);
        assert_eq!(picard.final_iterate, relaxed.final_iterate);
    }

    #[test]
    fn relaxed_omega_two_cancels_the_scalar_multiplier() {
        // effective multiplier 1 - omega (1 - m) vanishes for m = 0.5,
        // omega = 2: one relaxed step lands on the fixed point, the next
        // evaluation verifies it
        let cfg = SolveConfig::default().with_omega(2.0);
        let mut map = affine_map();
        let report = relaxed_solve(&mut map, &[0.0], &cfg).unwrap();
        assert!(report.converged);
        assert_eq!(report.total_evals, 2);
        assert_eq!(report.final_iterate, vec![2.0]);
    }

    #[test]
    fn budget_exhaustion_reports_not_converged() {
        let cfg = SolveConfig::default().with_max_evals(5);
        let mut map = affine_map();
        let report = picard_solve(&mut map, &[0.0], &cfg).unwrap();
        assert!(!report.converged);
        assert_eq!(report.total_evals, 5);
        assert_eq!(report.trace.len(), 5);
    }

    #[test]
    fn expanding_map_trips_the_divergence_guard() {
        let mut map = FixedPointMap::new(1, |x: &[f64]| vec![2.0 * x[0]]);
        let err = picard_solve(&mut map, &[1.0], &SolveConfig::default()).unwrap_err();
        match err {
            Error::Diverged(report) => {
                assert!(!report.converged);
                assert!(!report.trace.is_empty());
                assert!(report.final_residual_inf.is_finite());
            }
            other => panic!("expected divergence, got {other:?}"),
        }
    }
}
