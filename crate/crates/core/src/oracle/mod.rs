//! Independent numerical eigenvalue oracle.
//!
//! The radial problems are discretised as symmetric tridiagonal matrices,
//! their lowest eigenvalues are isolated by Sturm-sequence bisection, and a
//! grid-doubling pair is Richardson-extrapolated to cancel the `O(h^2)` error.
//! Nothing here uses the closed-form spectra; [`verify`] compares the two.

mod operators;
mod tridiag;
pub mod verify;

use std::f64::consts::FRAC_PI_2;

pub use operators::{
    build_pt_operator, build_radial_operator_no_gup, Boundary, GridSpec, PtPotential, MIN_POINTS,
    RADIAL_TAIL,
};
pub use tridiag::{SymTridiagonal, BISECTION_BUDGET};
pub use verify::{verify_spectrum, LimitCheck, VerifyReport, VerifyRow};

use crate::error::{Error, Result};

/// Coarse cell count for the Pöschl–Teller oracle (fine grid doubles it).
pub const DEFAULT_PT_POINTS: usize = 4096;
/// Coarse cell count for the undeformed radial oracle.
pub const DEFAULT_RADIAL_POINTS: usize = 2048;
/// `p_max^2 / (2 lambda)` used by [`radial_grid`].
pub const DEFAULT_RADIAL_TAIL: f64 = 50.0;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    /// Ascending raw eigenvalues (of the finer grid after extrapolation).
    pub eigenvalues: Vec<f64>,
    pub grid: Option<GridSpec>,
    /// Richardson-combined values; equal to `eigenvalues` for a single grid.
    pub extrapolated: Vec<f64>,
    /// `|fine - coarse| / 3`; zero for a single grid.
    pub error_estimate: Vec<f64>,
}

impl OracleResult {
    fn single(eigenvalues: Vec<f64>, grid: Option<GridSpec>) -> Self {
        OracleResult {
            extrapolated: eigenvalues.clone(),
            error_estimate: vec![0.0; eigenvalues.len()],
            eigenvalues,
            grid,
        }
    }

    /// Best available estimate of eigenvalue `k`.
    pub fn best(&self, k: usize) -> Option<f64> {
        self.extrapolated.get(k).copied()
    }
}

/// The `count` smallest eigenvalues of a bare operator.
pub fn eigen_lowest(operator: &SymTridiagonal, count: usize) -> Result<OracleResult> {
    Ok(OracleResult::single(operator.lowest_eigenvalues(count)?, None))
}

/// As [`eigen_lowest`], tagging the grid and enforcing `count <= points/4`.
pub fn eigen_on_grid(operator: &SymTridiagonal, grid: &GridSpec, count: usize) -> Result<OracleResult> {
    if count > grid.points / 4 {
        return Err(Error::InvalidGrid(format!(
            "{count} eigenvalues requested from {} points",
            grid.points
        )));
    }
    Ok(OracleResult::single(operator.lowest_eigenvalues(count)?, Some(*grid)))
}

/// Second-order Richardson step: `(4 fine - coarse) / 3`.
pub fn richardson_pair(coarse: &OracleResult, fine: &OracleResult) -> Result<OracleResult> {
    let (Some(cg), Some(fg)) = (coarse.grid, fine.grid) else {
        return Err(Error::GridMismatch("both results need grid metadata".into()));
    };
    GridSpec::check_refinement(&cg, &fg)?;
    if coarse.eigenvalues.len() != fine.eigenvalues.len() {
        return Err(Error::GridMismatch(format!(
            "{} coarse vs {} fine eigenvalues",
            coarse.eigenvalues.len(),
            fine.eigenvalues.len()
        )));
    }
    let (extrapolated, error_estimate) = coarse
        .eigenvalues
        .iter()
        .zip(&fine.eigenvalues)
        .map(|(&c, &f)| ((4.0 * f - c) / 3.0, (f - c).abs() / 3.0))
        .unzip();
    Ok(OracleResult {
        eigenvalues: fine.eigenvalues.clone(),
        grid: Some(fg),
        extrapolated,
        error_estimate,
    })
}

/// Observed order `log2(|e1 - e2| / |e2 - e4|)` from grids `h`, `h/2`, `h/4`.
pub fn convergence_order(e_h: f64, e_h2: f64, e_h4: f64) -> f64 {
    ((e_h - e_h2).abs() / (e_h2 - e_h4).abs()).log2()
}

/// Whole PT domain `[0, pi/(2 alpha)]`.
pub fn pt_grid(alpha: f64, points: usize) -> Result<GridSpec> {
    GridSpec::new(0.0, FRAC_PI_2 / alpha, points)
}

/// `[0, p_max]` with `p_max^2 / (2 lambda) = DEFAULT_RADIAL_TAIL`.
pub fn radial_grid(lambda: f64, points: usize) -> Result<GridSpec> {
    GridSpec::new(0.0, (2.0 * DEFAULT_RADIAL_TAIL * lambda).sqrt(), points)
}

/// Extrapolated PT eigenvalues `varsigma_bar` on `coarse` and its refinement.
pub fn pt_oracle(potential: PtPotential, alpha: f64, coarse: &GridSpec, count: usize) -> Result<OracleResult> {
    let fine = coarse.refined();
    let c = eigen_on_grid(&build_pt_operator(potential, alpha, coarse)?, coarse, count)?;
    let f = eigen_on_grid(&build_pt_operator(potential, alpha, &fine)?, &fine, count)?;
    richardson_pair(&c, &f)
}

/// Extrapolated `kappa^2` for the undeformed radial problem.
pub fn radial_oracle(lambda: f64, j: i32, coarse: &GridSpec, count: usize) -> Result<OracleResult> {
    let fine = coarse.refined();
    let c = eigen_on_grid(&build_radial_operator_no_gup(lambda, j, coarse)?, coarse, count)?;
    let f = eigen_on_grid(&build_radial_operator_no_gup(lambda, j, &fine)?, &fine, count)?;
    richardson_pair(&c, &f)
}
