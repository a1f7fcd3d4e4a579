//! Terminating hypergeometric polynomials.
//!
//! Only the polynomial cases `1F1(-n; b; x)` and `2F1(-n, b; c; z)` are
//! needed. Coefficients are built with the ratio recurrence between
//! consecutive terms, so nothing overflows for degrees in the tens.
//!
//! The recurrence and the evaluation run in double-double arithmetic: the
//! alternating sums cancel heavily near the turning points of the
//! polynomials, and plain `f64` loses several digits there.

mod dd;

use crate::error::{Error, Result};
use dd::Dd;

/// Rising factorial `a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (a + f64::from(i)))
}

/// Rejects lower parameters that make `(c)_k` vanish for some `k <= n`.
fn check_denominator(n: u32, c: f64) -> Result<()> {
    if n > 0 && c <= 0.0 && c.fract() == 0.0 && c >= -f64::from(n - 1) {
        return Err(Error::DegenerateDenominator(c));
    }
    Ok(())
}

/// Coefficients `c_0..c_n` of a degree-`n` polynomial in its argument.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySeries {
    /// Coefficients rounded to `f64`.
    pub coefficients: Vec<f64>,
    exact: Vec<Dd>,
}

impl PolySeries {
    /// `1F1(-n; b; x) = sum_k (-n)_k / (b)_k x^k / k!`.
    pub fn kummer(n: u32, b: f64) -> Result<Self> {
        Self::gauss_like(n, None, b)
    }

    /// `2F1(-n, b; c; z) = sum_k (-n)_k (b)_k / (c)_k z^k / k!`.
    pub fn gauss(n: u32, b: f64, c: f64) -> Result<Self> {
        Self::gauss_like(n, Some(b), c)
    }

    fn gauss_like(n: u32, upper: Option<f64>, lower: f64) -> Result<Self> {
        check_denominator(n, lower)?;
        let mut exact = Vec::with_capacity(n as usize + 1);
        let mut term = Dd::ONE;
        exact.push(term);
        let minus_n = -f64::from(n);
        for k in 0..n {
            let k = f64::from(k);
            let up = upper.map_or(Dd::ONE, |b| Dd::sum(b, k));
            term = term * (minus_n + k) * up / (Dd::sum(lower, k) * (k + 1.0));
            exact.push(term);
        }
        Ok(PolySeries {
            coefficients: exact.iter().map(|&c| c.to_f64()).collect(),
            exact,
        })
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.exact.iter().rev().fold(Dd::ZERO, |acc, &c| acc * x + c).to_f64()
    }

    /// Derivative with respect to the argument.
    pub fn eval_derivative(&self, x: f64) -> f64 {
        let d = self
            .exact
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Dd::ZERO, |acc, (k, &c)| acc * x + c * k as f64);
        d.to_f64()
    }
}

/// Terminating confluent hypergeometric function `1F1(-n; b; x)`.
pub fn kummer_poly(n: u32, b: f64, x: f64) -> Result<f64> {
    Ok(PolySeries::kummer(n, b)?.eval(x))
}

/// Terminating Gauss hypergeometric function `2F1(-n, b; c; z)`.
pub fn gauss2f1_poly(n: u32, b: f64, c: f64, z: f64) -> Result<f64> {
    Ok(PolySeries::gauss(n, b, c)?.eval(z))
}

/// Partial sum of `2F1(a, b; c; z)` over the first `terms` terms, with no
/// truncation assumption. Used to check that terms past the degree vanish.
pub fn hyp2f1_partial_sum(a: f64, b: f64, c: f64, z: f64, terms: u32) -> f64 {
    let mut sum = Dd::ZERO;
    let mut term = Dd::ONE;
    for k in 0..terms {
        sum = sum + term;
        let k = f64::from(k);
        term = term * Dd::sum(a, k) * Dd::sum(b, k) * z
            / (Dd::sum(c, k) * (k + 1.0));
    }
    sum.to_f64()
}
