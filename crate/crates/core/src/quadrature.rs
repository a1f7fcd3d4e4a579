//! Adaptive Gauss–Legendre panel quadrature.
//!
//! Nodes are interior points only, so integrands with integrable endpoint
//! singularities (e.g. `p^{-1/2}`) are never evaluated at the ends.

use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Fixed-order rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes by Newton iteration on `P_n` from the Tricomi initial guesses.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "quadrature order must be positive");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integral of `f` over `[a, b]` with this rule.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: &F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
}

/// Default rule order for [`adaptive`].
pub const DEFAULT_ORDER: usize = 20;
const INITIAL_PANELS: usize = 8;
const MAX_PANELS: usize = 1 << 14;

/// Globally adaptive: keeps splitting the panel with the largest error
/// estimate until the summed estimate drops below `rel_tol * |integral|`.
/// A panel's estimate is the gap between the rule on the whole panel and on
/// its two halves.
pub fn adaptive<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel_tol: f64) -> Result<QuadratureResult> {
    adaptive_with(&GaussLegendre::new(DEFAULT_ORDER), f, a, b, rel_tol)
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error).is_eq()
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn panel<F: Fn(f64) -> f64>(rule: &GaussLegendre, f: &F, lo: f64, hi: f64) -> Panel {
    let mid = 0.5 * (lo + hi);
    let whole = rule.integrate(f, lo, hi);
    let value = rule.integrate(f, lo, mid) + rule.integrate(f, mid, hi);
    Panel {
        lo,
        hi,
        value,
        error: (value - whole).abs(),
    }
}

pub fn adaptive_with<F: Fn(f64) -> f64>(
    rule: &GaussLegendre,
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    let width = b - a;
    let mut heap: BinaryHeap<Panel> = (0..INITIAL_PANELS)
        .map(|i| {
            let lo = a + width * i as f64 / INITIAL_PANELS as f64;
            let hi = a + width * (i + 1) as f64 / INITIAL_PANELS as f64;
            panel(rule, &f, lo, hi)
        })
        .collect();
    let mut value: f64 = heap.iter().map(|p| p.value).sum();
    let mut error: f64 = heap.iter().map(|p| p.error).sum();
    let mut magnitude: f64 = heap.iter().map(|p| p.value.abs()).sum();
    loop {
        if error <= rel_tol * value.abs() || error <= 8.0 * f64::EPSILON * magnitude {
            return Ok(QuadratureResult {
                value: heap.iter().map(|p| p.value).sum(),
                error_estimate: heap.iter().map(|p| p.error).sum(),
                panels: heap.len(),
            });
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.lo + worst.hi);
        if heap.len() + 2 > MAX_PANELS || mid <= worst.lo || mid >= worst.hi {
            return Err(Error::QuadratureNonConvergent {
                estimate: error / value.abs().max(f64::MIN_POSITIVE),
                panels: heap.len() + 1,
            });
        }
        let left = panel(rule, &f, worst.lo, mid);
        let right = panel(rule, &f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error = (error + left.error + right.error - worst.error).max(0.0);
        magnitude += left.value.abs() + right.value.abs() - worst.value.abs();
        heap.push(left);
        heap.push(right);
    }
}
