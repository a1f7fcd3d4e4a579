//! Finite-difference discretisations of the two radial problems.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::spectrum::PTParams;

use super::tridiag::SymTridiagonal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Boundary {
    #[default]
    Dirichlet,
}

/// Uniform grid over `[lower, upper]` split into `points` cells.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lower: f64,
    pub upper: f64,
    pub points: usize,
    pub boundary: Boundary,
}

/// Smallest accepted cell count.
pub const MIN_POINTS: usize = 64;

impl GridSpec {
    pub fn new(lower: f64, upper: f64, points: usize) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(Error::InvalidGrid(format!("empty domain [{lower}, {upper}]")));
        }
        if points < MIN_POINTS || !points.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "{points} points: need a power of two >= {MIN_POINTS}"
            )));
        }
        Ok(GridSpec {
            lower,
            upper,
            points,
            boundary: Boundary::Dirichlet,
        })
    }

    pub fn spacing(&self) -> f64 {
        (self.upper - self.lower) / self.points as f64
    }

    /// Same domain, twice the cells.
    pub fn refined(&self) -> Self {
        GridSpec {
            points: 2 * self.points,
            ..*self
        }
    }

    fn same_domain(&self, other: &GridSpec) -> bool {
        self.lower == other.lower && self.upper == other.upper
    }

    pub(crate) fn check_refinement(coarse: &GridSpec, fine: &GridSpec) -> Result<()> {
        if !coarse.same_domain(fine) {
            return Err(Error::GridMismatch(format!(
                "domains differ: [{}, {}] vs [{}, {}]",
                coarse.lower, coarse.upper, fine.lower, fine.upper
            )));
        }
        if fine.points != 2 * coarse.points {
            return Err(Error::GridMismatch(format!(
                "fine grid has {} points, expected {}",
                fine.points,
                2 * coarse.points
            )));
        }
        Ok(())
    }
}

/// Coefficients of `alpha^2 [g_sin / sin^2(alpha q) + g_cos / cos^2(alpha q)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtPotential {
    pub g_sin: f64,
    pub g_cos: f64,
}

impl From<&PTParams> for PtPotential {
    fn from(pt: &PTParams) -> Self {
        PtPotential {
            g_sin: pt.sin_strength(),
            g_cos: pt.cos_strength(),
        }
    }
}

impl PtPotential {
    /// From the barrier exponents `zeta (zeta - 1)`.
    pub fn from_zetas(zeta1: f64, zeta2: f64) -> Self {
        PtPotential {
            g_sin: zeta1 * (zeta1 - 1.0),
            g_cos: zeta2 * (zeta2 - 1.0),
        }
    }

    /// Exact spectrum `(zeta1 + zeta2 + 2n)^2` in units of `alpha^2`, with
    /// `zeta` the larger roots of `zeta (zeta - 1) = g`.
    pub fn exact_eigenvalue(&self, n: u32) -> f64 {
        let root = |g: f64| 0.5 + (0.25 + g).sqrt();
        let s = root(self.g_sin) + root(self.g_cos) + 2.0 * f64::from(n);
        s * s
    }
}

/// PT operator `-d^2/dq^2 + alpha^2 [..]` on a grid inside `(0, pi/(2 alpha))`.
///
/// With `g_sin >= 0` the potential form is used on the nodes `lower + i h`,
/// `i = 1..points-1`, with zero Dirichlet values at both ends. A negative
/// `g_sin` (the `j = 0` extrapolation, `zeta1 = 1/2`) makes the plain
/// potential form diverge, so the operator is then written in the
/// conservative form `-(1/w)(w f')' + [(zeta1 - 1/2)^2 / sin^2 + 1/4 + g_cos / cos^2] f`,
/// `w = sin(alpha q)`, on cell centres and symmetrised by `sqrt(w)`.
pub fn build_pt_operator(potential: PtPotential, alpha: f64, grid: &GridSpec) -> Result<SymTridiagonal> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::InvalidGrid(format!("alpha = {alpha} must be positive")));
    }
    let pole = FRAC_PI_2 / alpha;
    let slack = 1e-12 * pole;
    if grid.lower < -slack || grid.upper > pole + slack {
        return Err(Error::DomainContainsPole {
            lower: grid.lower,
            upper: grid.upper,
            pole,
        });
    }
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let a2 = alpha * alpha;
    if potential.g_sin >= 0.0 {
        let m = grid.points - 1;
        let diag = (1..=m)
            .map(|i| {
                let u = alpha * (grid.lower + i as f64 * h);
                let (s, c) = u.sin_cos();
                2.0 * inv_h2 + a2 * (potential.g_sin / (s * s) + potential.g_cos / (c * c))
            })
            .collect();
        SymTridiagonal::new(diag, vec![-inv_h2; m - 1])
    } else {
        let m = grid.points;
        let face = |i: usize| (alpha * (grid.lower + i as f64 * h)).sin();
        let centre = |i: usize| (alpha * (grid.lower + (i as f64 + 0.5) * h)).sin();
        let shifted = potential.g_sin + 0.25;
        let diag = (0..m)
            .map(|i| {
                let u = alpha * (grid.lower + (i as f64 + 0.5) * h);
                let (s, c) = u.sin_cos();
                (face(i) + face(i + 1)) * inv_h2 / centre(i)
                    + a2 * (shifted / (s * s) + 0.25 + potential.g_cos / (c * c))
            })
            .collect();
        let off = (1..m)
            .map(|i| -face(i) * inv_h2 / (centre(i - 1) * centre(i)).sqrt())
            .collect();
        SymTridiagonal::new(diag, off)
    }
}

/// Minimum `p_max^2 / (2 lambda)` for the undeformed radial domain.
pub const RADIAL_TAIL: f64 = 40.0;

/// Undeformed radial operator, eigenvalues `kappa^2`.
///
/// `-f'' - f'/p + [j^2/p^2 + p^2/lambda^2] f = kappa^2 f` is discretised in
/// the conservative form `-(1/p)(p f')'` on cell centres `(i + 1/2) h`; the
/// flux through `p = 0` vanishes with the weight. Scaling by `sqrt(p_i)`
/// (the discrete `u = sqrt(p) f`) makes the matrix symmetric.
pub fn build_radial_operator_no_gup(lambda: f64, j: i32, grid: &GridSpec) -> Result<SymTridiagonal> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::NonPositiveInput {
            name: "lambda",
            value: lambda,
        });
    }
    if grid.lower != 0.0 {
        return Err(Error::InvalidGrid("radial grid must start at p = 0".into()));
    }
    let required = (2.0 * RADIAL_TAIL * lambda).sqrt();
    if grid.upper < required {
        return Err(Error::DomainTooSmall {
            p_max: grid.upper,
            required,
        });
    }
    let h = grid.spacing();
    let inv_h2 = 1.0 / (h * h);
    let j_sq = f64::from(j) * f64::from(j);
    let m = grid.points;
    let face = |i: usize| i as f64 * h;
    let centre = |i: usize| (i as f64 + 0.5) * h;
    let diag = (0..m)
        .map(|i| {
            let p = centre(i);
            (face(i) + face(i + 1)) * inv_h2 / p + j_sq / (p * p) + p * p / (lambda * lambda)
        })
        .collect();
    let off = (1..m)
        .map(|i| -face(i) * inv_h2 / (centre(i - 1) * centre(i)).sqrt())
        .collect();
    SymTridiagonal::new(diag, off)
}
