//! Symmetric tridiagonal matrices and Sturm-sequence bisection.

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and first
/// off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

/// Bisection steps allowed per eigenvalue.
pub const BISECTION_BUDGET: usize = 200;

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::InvalidGrid(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal",
                diag.len(),
                off.len()
            )));
        }
        if diag.iter().chain(&off).any(|v| !v.is_finite()) {
            return Err(Error::InvalidGrid("non-finite matrix entry".into()));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            let radius = left + right;
            (lo.min(self.diag[i] - radius), hi.max(self.diag[i] + radius))
        })
    }

    /// Infinity norm, an upper bound on the spectral radius.
    pub fn norm(&self) -> f64 {
        let (lo, hi) = self.gershgorin();
        lo.abs().max(hi.abs())
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of the
    /// `LDL^T` factorisation of `T - x I`).
    pub fn sturm_count(&self, x: f64) -> usize {
        self.count_below(x, self.pivot_floor())
    }

    fn pivot_floor(&self) -> f64 {
        f64::MIN_POSITIVE.sqrt() * self.norm().max(1.0)
    }

    fn count_below(&self, x: f64, tiny: f64) -> usize {
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q == 0.0 {
            q = -tiny;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            let e = self.off[i - 1];
            q = self.diag[i] - x - e * e / q;
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `count` smallest eigenvalues in ascending order.
    ///
    /// Each is bisected until its bracket can no longer shrink in floating
    /// point, which is well inside `1e-12 * norm`.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count > self.dim() {
            return Err(Error::InvalidGrid(format!(
                "asked for {count} eigenvalues of a {}x{} matrix",
                self.dim(),
                self.dim()
            )));
        }
        let (g_lo, g_hi) = self.gershgorin();
        let tiny = self.pivot_floor();
        let mut out: Vec<f64> = Vec::with_capacity(count);
        for index in 0..count {
            let mut lo = out.last().copied().unwrap_or(g_lo).max(g_lo);
            let mut hi = g_hi;
            let mut converged = false;
            for _ in 0..BISECTION_BUDGET {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * (lo.abs() + hi.abs()) {
                    converged = true;
                    break;
                }
                if self.count_below(mid, tiny) > index {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            if !converged {
                return Err(Error::BisectionStall {
                    index,
                    iterations: BISECTION_BUDGET,
                });
            }
            out.push(0.5 * (lo + hi));
        }
        Ok(out)
    }
}
