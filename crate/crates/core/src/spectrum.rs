//! Closed-form spectra.
//!
//! Three evaluators live here and are deliberately kept apart:
//!
//! * [`no_gup_energy`]: `E^2 = 1 + 2 r N` for the undeformed oscillator;
//! * [`gup_energy_chain`]: the quantization chain
//!   `zeta1, zeta2 -> varsigma_bar = alpha^2 (zeta1 + zeta2 + 2n)^2
//!   -> varsigma = varsigma_bar - 1/beta -> E`;
//! * [`gup_energy_eq70_printed`]: the literal closed-form expression,
//!   evaluated with the deformation ratio read as `(beta/beta0) r^2 = r theta`.
//!
//! The last one disagrees with the chain; the oracle decides which is right.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{EnergyPair, EnergySource, Mode, ModelParams, QuantumNumbers, Variant};

/// Pöschl–Teller shape parameters for one angular index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTParams {
    /// Exponent of the `1/sin^2` barrier, `|j| + 1/2`.
    pub zeta1: f64,
    /// Exponent of the `1/cos^2` barrier.
    pub zeta2: f64,
    /// Anisotropy `sqrt(1 + j^2 / (1/theta - 1)^2)`.
    pub sigma: f64,
    /// `beta * lambda`; `alpha^2 = theta * lambda` in momentum units.
    pub theta: f64,
    pub j: i32,
    pub variant: Variant,
}

impl PTParams {
    /// `zeta1 (zeta1 - 1)`.
    pub fn sin_strength(&self) -> f64 {
        self.zeta1 * (self.zeta1 - 1.0)
    }

    /// `zeta2 (zeta2 - 1)`, written as `(zeta2 - 1/2)^2 - 1/4` to keep
    /// precision when `zeta2` is large.
    pub fn cos_strength(&self) -> f64 {
        let shifted = self.zeta2 - 0.5;
        shifted * shifted - 0.25
    }

    /// `zeta1 + zeta2 + 2n`, whose square is `varsigma_bar / alpha^2`.
    pub fn level_index(&self, n: u32) -> f64 {
        self.zeta1 + self.zeta2 + 2.0 * f64::from(n)
    }
}

/// Barrier strengths obtained by substituting the tangent map straight into
/// the effective potential, independent of any root choice:
/// `(j^2 - 1/4, j^2 + 3/4 - 2/theta + 1/theta^2)`.
pub fn barrier_strengths(theta: f64, j: i32) -> (f64, f64) {
    let j_sq = f64::from(j) * f64::from(j);
    let g = 1.0 / theta - 1.0;
    (j_sq - 0.25, g * g + j_sq - 0.25)
}

fn check_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < 1.0 {
        Ok(())
    } else {
        Err(Error::ThetaOutOfRange(theta))
    }
}

/// `Sigma - 1`, computed without cancellation for small `theta`.
fn sigma_minus_one(theta: f64, j: i32) -> f64 {
    let g = 1.0 / theta - 1.0;
    let ratio = f64::from(j) * f64::from(j) / (g * g);
    ratio / ((1.0 + ratio).sqrt() + 1.0)
}

/// Plus roots of both barrier quadratics.
pub fn pt_parameters(
    theta: f64,
    j: i32,
    variant: Variant,
    allow_extrapolation: bool,
) -> Result<PTParams> {
    check_theta(theta)?;
    if j == 0 && !allow_extrapolation {
        return Err(Error::ZeroAngularMomentumInGUP);
    }
    let sigma = 1.0 + sigma_minus_one(theta, j);
    let zeta1 = f64::from(j.unsigned_abs()) + 0.5;
    let zeta2 = variant.zeta2_offset() + (1.0 / theta - 1.0) * sigma;
    Ok(PTParams {
        zeta1,
        zeta2,
        sigma,
        theta,
        j,
        variant,
    })
}

pub fn no_gup_energy(r: f64, qn: QuantumNumbers) -> EnergyPair {
    let e_sq = 1.0 + 2.0 * r * f64::from(qn.principal());
    EnergyPair::from_energy_sq(e_sq, EnergySource::NoGupClosed)
        .expect("1 + 2rN is positive for r > 0")
}

/// `E^2/(m0 c^2)^2` from the quantization chain.
///
/// Algebraically `1 + r theta S^2 - r / theta` with `S = zeta1 + zeta2 + 2n`.
/// It is evaluated as `1 + r (S - 1/theta) (theta S + 1)`, where
/// `S - 1/theta = zeta1 + offset + 2n - Sigma + (Sigma - 1)/theta` carries no
/// large cancelling terms, so the `theta -> 0` limit stays accurate.
pub fn gup_energy_sq_chain(r: f64, theta: f64, pt: &PTParams, n: u32) -> f64 {
    let reduced = pt.zeta1 + pt.variant.zeta2_offset() + 2.0 * f64::from(n) - pt.sigma
        + sigma_minus_one(theta, pt.j) / theta;
    let s = pt.level_index(n);
    1.0 + r * reduced * (theta * s + 1.0)
}

pub fn gup_energy_chain(
    r: f64,
    theta: f64,
    qn: QuantumNumbers,
    variant: Variant,
    allow_extrapolation: bool,
) -> Result<EnergyPair> {
    let pt = pt_parameters(theta, qn.j, variant, allow_extrapolation)?;
    EnergyPair::from_energy_sq(
        gup_energy_sq_chain(r, theta, &pt, qn.n),
        EnergySource::GupChain,
    )
}

/// The closed-form expression, taken literally.
pub fn gup_energy_eq70_printed(
    r: f64,
    theta: f64,
    qn: QuantumNumbers,
    allow_extrapolation: bool,
) -> Result<EnergyPair> {
    check_theta(theta)?;
    if qn.j == 0 && !allow_extrapolation {
        return Err(Error::ZeroAngularMomentumInGUP);
    }
    let sigma = 1.0 + sigma_minus_one(theta, qn.j);
    let big_n = f64::from(qn.principal());
    let j_sq = f64::from(qn.j) * f64::from(qn.j);
    let e_sq = 1.0 - 2.0 * r
        + 2.0 * sigma * r * (big_n + 1.0)
        + r * theta * (big_n * big_n - 2.0 * sigma * (big_n + 1.0) + j_sq);
    EnergyPair::from_energy_sq(e_sq, EnergySource::GupEq70Printed)
}

/// Energies for one state under the given mode, chain evaluator for GUP.
pub fn energy(
    params: &ModelParams,
    qn: QuantumNumbers,
    mode: Mode,
    variant: Variant,
    allow_extrapolation: bool,
) -> Result<EnergyPair> {
    match mode {
        Mode::NoGup => Ok(no_gup_energy(params.r, qn)),
        Mode::Gup => gup_energy_chain(params.r, params.theta, qn, variant, allow_extrapolation),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumRow {
    pub qn: QuantumNumbers,
    pub principal: u32,
    pub source: EnergySource,
    pub energies: Result<EnergyPair>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub rows: Vec<SpectrumRow>,
    pub params: ModelParams,
    pub mode: Mode,
    pub variant: Variant,
}

/// All `(n, j)` with `n <= n_max`, `|j| <= j_max`, sorted by `(N, |j|, n, j)`.
/// `j = 0` is skipped in GUP mode unless `allow_j0`.
pub fn enumerate_states(n_max: u32, j_max: u32, mode: Mode, allow_j0: bool) -> Vec<QuantumNumbers> {
    let j_max = j_max as i32;
    let mut states: Vec<QuantumNumbers> = (0..=n_max)
        .flat_map(|n| (-j_max..=j_max).map(move |j| QuantumNumbers { n, j }))
        .filter(|qn| qn.j != 0 || mode == Mode::NoGup || allow_j0)
        .collect();
    states.sort_by_key(|qn| (qn.principal(), qn.abs_j(), qn.n, qn.j));
    states
}

/// Tabulates the spectrum. Per-level failures become flagged rows.
pub fn spectrum_table(
    params: &ModelParams,
    n_max: u32,
    j_max: u32,
    mode: Mode,
    variant: Variant,
    allow_j0: bool,
) -> SpectrumTable {
    let source = match mode {
        Mode::NoGup => EnergySource::NoGupClosed,
        Mode::Gup => EnergySource::GupChain,
    };
    let rows = enumerate_states(n_max, j_max, mode, allow_j0)
        .into_par_iter()
        .map(|qn| SpectrumRow {
            qn,
            principal: qn.principal(),
            source,
            energies: energy(params, qn, mode, variant, allow_j0),
        })
        .collect();
    SpectrumTable {
        rows,
        params: *params,
        mode,
        variant,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qn(n: u32, j: i32) -> QuantumNumbers {
        QuantumNumbers { n, j }
    }

    #[test]
    fn no_gup_examples() {
        let e = no_gup_energy(0.5, qn(1, 1));
        assert_eq!((e.plus, e.minus), (2.0, -2.0));
        let e = no_gup_energy(0.37, qn(0, 0));
        assert_eq!((e.plus, e.minus), (1.0, -1.0));
        let e = no_gup_energy(1.0, qn(2, 0));
        assert_eq!((e.plus, e.minus), (3.0, -3.0));
    }

    #[test]
    fn pt_parameter_examples() {
        let pt = pt_parameters(0.5, 1, Variant::Eq60, false).unwrap();
        assert_eq!(pt.zeta1, 1.5);
        assert!((pt.sigma - 2f64.sqrt()).abs() < 1e-15);
        assert!((pt.zeta2 - (0.5 + 2f64.sqrt())).abs() < 1e-15);

        let pt = pt_parameters(0.5, 2, Variant::Eq60, false).unwrap();
        assert_eq!(pt.zeta1, 2.5);
        assert!((pt.sigma - 5f64.sqrt()).abs() < 1e-15);
        assert!((pt.zeta2 - (0.5 + 5f64.sqrt())).abs() < 1e-15);

        let theta = 1e-6;
        let pt = pt_parameters(theta, 3, Variant::Eq60, false).unwrap();
        assert!((pt.sigma - 1.0).abs() < 1e-10);
        assert!((pt.zeta2 - (1.0 / theta - 0.5)).abs() < 1e-4);
    }

    #[test]
    fn pt_parameter_errors() {
        assert_eq!(
            pt_parameters(1.0, 1, Variant::Eq60, false),
            Err(Error::ThetaOutOfRange(1.0))
        );
        assert_eq!(
            pt_parameters(0.0, 1, Variant::Eq60, false),
            Err(Error::ThetaOutOfRange(0.0))
        );
        assert_eq!(
            pt_parameters(0.3, 0, Variant::Eq60, false),
            Err(Error::ZeroAngularMomentumInGUP)
        );
        let pt = pt_parameters(0.3, 0, Variant::Eq60, true).unwrap();
        assert_eq!(pt.zeta1, 0.5);
        assert_eq!(pt.sigma, 1.0);
    }

    #[test]
    fn root_conventions_against_barrier_quadratics() {
        for &theta in &[0.05, 0.2, 0.5, 0.9] {
            for j in -3..=3 {
                if j == 0 {
                    continue;
                }
                let (g1, g2) = barrier_strengths(theta, j);
                let eq60 = pt_parameters(theta, j, Variant::Eq60, false).unwrap();
                assert!((eq60.sin_strength() - g1).abs() <= 1e-12 * g1.abs().max(1.0));
                assert!((eq60.cos_strength() - g2).abs() <= 1e-12 * g2.abs());
                let eq69 = pt_parameters(theta, j, Variant::Eq69, false).unwrap();
                assert!((eq69.sin_strength() - g1).abs() <= 1e-12 * g1.abs().max(1.0));
                // zeta2 is shifted by 1/2, so zeta2(zeta2-1) misses by zeta2 - 1/4 - ... > 0
                assert!((eq69.cos_strength() - g2).abs() > 1e-3 * g2.abs());
            }
        }
    }

    #[test]
    fn chain_examples() {
        let e = gup_energy_chain(0.5, 1e-9, qn(1, 1), Variant::Eq60, false).unwrap();
        assert!((e.plus - 2.0).abs() < 1e-6);

        let e = gup_energy_chain(0.1, 0.5, qn(0, 1), Variant::Eq60, false).unwrap();
        let s = 2.0 + 2f64.sqrt();
        let expected = (1.0 + 0.05 * s * s - 0.2f64).sqrt();
        assert!((e.plus - expected).abs() < 1e-14);
        assert_eq!(e.plus + e.minus, 0.0);
    }

    #[test]
    fn chain_matches_direct_formula() {
        for &(r, theta) in &[(0.2, 0.25), (1.0, 0.7), (0.05, 0.1)] {
            for n in 0..4 {
                for j in 1..4 {
                    for variant in [Variant::Eq60, Variant::Eq69] {
                        let pt = pt_parameters(theta, j, variant, false).unwrap();
                        let s = pt.level_index(n);
                        let direct = 1.0 + r * theta * s * s - r / theta;
                        let stable = gup_energy_sq_chain(r, theta, &pt, n);
                        assert!((direct - stable).abs() < 1e-12 * direct, "{direct} {stable}");
                    }
                }
            }
        }
    }

    #[test]
    fn eq69_offset_in_the_limit() {
        // S grows by 1/2, so theta S^2 grows by S theta + theta/4 -> 1 as theta -> 0.
        let r = 0.5;
        let q = qn(1, 2);
        let e69 = gup_energy_chain(r, 1e-9, q, Variant::Eq69, false).unwrap();
        let e0 = no_gup_energy(r, q);
        let offset = e69.plus * e69.plus - e0.plus * e0.plus;
        assert!((offset - r).abs() < 1e-6, "offset {offset}");
    }

    #[test]
    fn eq70_printed_examples() {
        let q = qn(1, 2);
        let printed = gup_energy_eq70_printed(0.2, 0.25, q, false).unwrap();
        let sigma = (1.0f64 + 4.0 / 9.0).sqrt();
        let (r, th, nn) = (0.2, 0.25, 4.0);
        let e_sq = 1.0 - 2.0 * r
            + 2.0 * sigma * r * (nn + 1.0)
            + r * th * (nn * nn - 2.0 * sigma * (nn + 1.0) + 4.0);
        assert!((printed.plus - e_sq.sqrt()).abs() < 1e-14);

        let limit = gup_energy_eq70_printed(0.2, 1e-9, q, false).unwrap();
        assert!((limit.plus - no_gup_energy(0.2, q).plus).abs() < 1e-8);

        let chain = gup_energy_chain(0.2, 0.25, q, Variant::Eq60, false).unwrap();
        assert!((printed.plus - chain.plus).abs() / chain.plus > 1e-3);
    }

    #[test]
    fn table_counting_rules() {
        let p = ModelParams::from_dimensionless(0.5, 0.0).unwrap();
        let t = spectrum_table(&p, 0, 0, Mode::NoGup, Variant::Eq60, false);
        assert_eq!(t.rows.len(), 1);
        let e = t.rows[0].energies.as_ref().unwrap();
        assert_eq!((t.rows[0].principal, e.plus, e.minus), (0, 1.0, -1.0));

        let t = spectrum_table(&p, 1, 1, Mode::NoGup, Variant::Eq60, false);
        let got: Vec<(u32, f64)> = t
            .rows
            .iter()
            .map(|row| (row.principal, row.energies.as_ref().unwrap().plus))
            .collect();
        let s2 = 2f64.sqrt();
        let s3 = 3f64.sqrt();
        let expected = [(0, 1.0), (1, s2), (1, s2), (2, s3), (3, 2.0), (3, 2.0)];
        assert_eq!(got.len(), expected.len());
        for ((n1, e1), (n2, e2)) in got.iter().zip(expected.iter()) {
            assert_eq!(n1, n2);
            assert!((e1 - e2).abs() < 1e-15);
        }

        let g = ModelParams::from_dimensionless(0.2, 0.3).unwrap();
        let t = spectrum_table(&g, 2, 2, Mode::Gup, Variant::Eq60, false);
        assert_eq!(t.rows.len(), 12);
        assert!(t.rows.iter().all(|row| row.qn.j != 0));
    }

    #[test]
    fn table_flags_bad_rows_instead_of_failing() {
        let p = ModelParams::from_dimensionless(0.2, 0.0).unwrap();
        let t = spectrum_table(&p, 1, 1, Mode::Gup, Variant::Eq60, false);
        assert_eq!(t.rows.len(), 4);
        assert!(t
            .rows
            .iter()
            .all(|row| row.energies == Err(Error::ThetaOutOfRange(0.0))));
    }

    #[test]
    fn degeneracy_and_monotonicity() {
        for &theta in &[0.1, 0.3, 0.5] {
            let r = 0.2;
            // equal N, different |j|: N = 3 from (n=1, j=1) and (n=0, j=3)
            let a = gup_energy_chain(r, theta, qn(1, 1), Variant::Eq60, false).unwrap();
            let b = gup_energy_chain(r, theta, qn(0, 3), Variant::Eq60, false).unwrap();
            assert!(a.plus != b.plus);
            let c = gup_energy_chain(r, theta, qn(1, 2), Variant::Eq60, false).unwrap();
            let d = gup_energy_chain(r, theta, qn(2, 0), Variant::Eq60, true).unwrap();
            assert!(c.plus != d.plus);
            for j in 1..=3 {
                let mut prev = 0.0;
                for n in 0..6 {
                    let e = gup_energy_chain(r, theta, qn(n, j), Variant::Eq60, false).unwrap();
                    assert!(e.plus > prev);
                    prev = e.plus;
                }
            }
        }
        let a = no_gup_energy(0.2, qn(1, 1));
        let b = no_gup_energy(0.2, qn(0, 3));
        assert_eq!(a.plus, b.plus);
    }

    #[test]
    fn limit_lattice() {
        for &r in &[0.1, 0.5, 1.0] {
            for n in 0..=3 {
                for j in [-3, -2, -1, 1, 2, 3] {
                    let q = qn(n, j);
                    let chain = gup_energy_chain(r, 1e-9, q, Variant::Eq60, false).unwrap();
                    let flat = no_gup_energy(r, q);
                    assert!((chain.plus - flat.plus).abs() / flat.plus <= 1e-6);
                }
            }
        }
    }
}
