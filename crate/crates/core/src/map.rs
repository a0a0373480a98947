//! The map abstraction: an evaluatable `T: R^d -> R^d` with an owned
//! evaluation counter, plus the residual norm used by every stopping test.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared evaluation closure backing a [`FixedPointMap`].
pub type MapFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

/// An evaluatable map `T: R^d -> R^d` with dimension metadata and an owned
/// evaluation counter.
///
/// Every solver charges its work against this counter, so "number of map
/// evaluations" is an observable rather than a bookkeeping convention. The
/// counter increments exactly once per [`evaluate`](Self::evaluate) call that
/// reaches the underlying closure. Handles are not shared across concurrent
/// solves; [`fresh`](Self::fresh) produces an independent handle over the
/// same closure with a zeroed counter.
pub struct FixedPointMap {
    dim: usize,
    f: MapFn,
    eval_count: u64,
}

impl FixedPointMap {
    /// Wraps a raw map in a counted handle. The counter starts at zero and
    /// the wrapped output is returned unchanged.
    pub fn new<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        Self::from_arc(dim, Arc::new(f))
    }

    pub fn from_arc(dim: usize, f: MapFn) -> Self {
        assert!(dim > 0, "map dimension must be positive");
        Self { dim, f, eval_count: 0 }
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Number of times the underlying map has executed through this handle.
    pub fn eval_count(&self) -> u64 {
        self.eval_count
    }

    /// The shared closure, without any counting. Useful for wrapping the same
    /// map in a second, independently counted handle.
    pub fn raw(&self) -> MapFn {
        Arc::clone(&self.f)
    }

    /// An independent handle over the same map with a fresh counter.
    pub fn fresh(&self) -> Self {
        Self { dim: self.dim, f: Arc::clone(&self.f), eval_count: 0 }
    }

    /// Applies the map to `x`, incrementing the counter once.
    ///
    /// The counter only moves when the underlying closure actually runs:
    /// an input of the wrong length is rejected beforehand, while an output
    /// of the wrong length is reported after the (counted) evaluation.
    pub fn evaluate(&mut self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        self.eval_count += 1;
        let out = (self.f)(x);
        if out.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: out.len() });
        }
        Ok(out)
    }
}

impl fmt::Debug for FixedPointMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FixedPointMap")
            .field("dim", &self.dim)
            .field("eval_count", &self.eval_count)
            .finish()
    }
}

/// Max-norm residual `max_i |tx_i - x_i|` between an iterate and its image.
pub fn residual_inf_norm(x: &[f64], tx: &[f64]) -> Result<f64> {
    if x.len() != tx.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: tx.len() });
    }
    Ok(x.iter().zip(tx).map(|(a, b)| (b - a).abs()).fold(0.0, f64::max))
}
