//! Momentum-space eigenfunctions.
//!
//! Undeformed oscillator:
//! `psi = C p^|j| exp(-p^2 / (2 lambda)) 1F1(-n; |j|+1; p^2/lambda) e^{i|j|phi}`.
//!
//! Deformed oscillator, with `z = beta p^2 / (1 + beta p^2)`:
//! `psi = C p^{-1/2} z^{zeta1/2} (1-z)^{zeta2/2} 2F1(-n, zeta1+zeta2+n; zeta1+1/2; z) e^{i|j|phi}`.
//! The upper parameter `zeta1 + zeta2 + n` follows from imposing `a = -n`
//! together with `a + b = zeta1 + zeta2`. Only the branch regular at `z = 0`
//! is kept.
//!
//! Normalization uses `p dp dphi` without deformation and
//! `p dp dphi / (1 + beta p^2)` with it (see [`Measure`]).

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{Mode, ModelParams, QuantumNumbers, Variant};
use crate::quadrature;
use crate::specfun::PolySeries;
use crate::spectrum::{self, PTParams};

/// `k p^2 / 2` at which undeformed integrals are truncated.
pub const GAUSSIAN_TAIL_CUT: f64 = 40.0;
/// Relative tolerance handed to the quadrature for norms and overlaps.
pub const QUADRATURE_REL_TOL: f64 = 1e-11;

/// Integration weight for the deformed problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Measure {
    /// `p dp dphi / (1 + beta p^2)`, under which the deformed position
    /// operators are symmetric.
    #[default]
    Deformed,
    /// Plain `p dp dphi`, for sensitivity checks.
    Flat,
}

/// Everything that identifies one eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateSpec {
    pub qn: QuantumNumbers,
    pub params: ModelParams,
    pub mode: Mode,
    pub variant: Variant,
    pub measure: Measure,
    pub allow_j0: bool,
}

impl StateSpec {
    pub fn no_gup(qn: QuantumNumbers, params: ModelParams) -> Self {
        StateSpec {
            qn,
            params,
            mode: Mode::NoGup,
            variant: Variant::Eq60,
            measure: Measure::Deformed,
            allow_j0: false,
        }
    }

    pub fn gup(qn: QuantumNumbers, params: ModelParams, variant: Variant) -> Self {
        StateSpec {
            qn,
            params,
            mode: Mode::Gup,
            variant,
            measure: Measure::Deformed,
            allow_j0: false,
        }
    }
}

pub fn map_q_of_p(p: f64, params: &ModelParams) -> Result<f64> {
    if params.beta <= 0.0 {
        return Err(Error::BetaZero);
    }
    Ok((params.beta.sqrt() * p).atan() / params.alpha)
}

/// `z = sin^2(alpha q(p))`, in its algebraic form `beta p^2 / (1 + beta p^2)`.
pub fn map_z_of_p(p: f64, params: &ModelParams) -> Result<f64> {
    if params.beta <= 0.0 {
        return Err(Error::BetaZero);
    }
    let x = params.beta * p * p;
    Ok(x / (1.0 + x))
}

/// Inverse of [`map_z_of_p`] on `[0, 1)`.
pub fn p_of_z(z: f64, params: &ModelParams) -> Result<f64> {
    if params.beta <= 0.0 {
        return Err(Error::BetaZero);
    }
    Ok((z / (params.beta * (1.0 - z))).sqrt())
}

/// Unnormalized radial part.
#[derive(Debug, Clone)]
enum Radial {
    NoGup {
        k: f64,
        abs_j: i32,
        poly: PolySeries,
    },
    Gup {
        beta: f64,
        pt: PTParams,
        poly: PolySeries,
    },
}

impl Radial {
    fn new(state: &StateSpec) -> Result<Self> {
        let abs_j = state.qn.abs_j();
        match state.mode {
            Mode::NoGup => {
                let poly = PolySeries::kummer(state.qn.n, f64::from(abs_j) + 1.0)?;
                Ok(Radial::NoGup {
                    k: 1.0 / state.params.lambda,
                    abs_j: abs_j as i32,
                    poly,
                })
            }
            Mode::Gup => {
                if state.params.beta <= 0.0 {
                    return Err(Error::BetaZero);
                }
                let pt = spectrum::pt_parameters(
                    state.params.theta,
                    state.qn.j,
                    state.variant,
                    state.allow_j0,
                )?;
                let n = f64::from(state.qn.n);
                let poly = PolySeries::gauss(state.qn.n, pt.zeta1 + pt.zeta2 + n, pt.zeta1 + 0.5)?;
                Ok(Radial::Gup {
                    beta: state.params.beta,
                    pt,
                    poly,
                })
            }
        }
    }

    fn value(&self, p: f64) -> Result<f64> {
        match self {
            Radial::NoGup { k, abs_j, poly } => {
                let x = k * p * p;
                Ok(p.powi(*abs_j) * (-0.5 * x).exp() * poly.eval(x))
            }
            Radial::Gup { beta, pt, poly } => {
                if !(p > 0.0) {
                    return Err(Error::NonPositiveMomentum(p));
                }
                let x = beta * p * p;
                let z = x / (1.0 + x);
                let one_minus_z = 1.0 / (1.0 + x);
                Ok(p.powf(-0.5)
                    * z.powf(0.5 * pt.zeta1)
                    * one_minus_z.powf(0.5 * pt.zeta2)
                    * poly.eval(z))
            }
        }
    }

    /// `self * other * weight` integrated over the radial variable, without
    /// the `2 pi` from the angle.
    fn weighted_integral(&self, other: &Radial, lambda: f64, measure: Measure) -> Result<f64> {
        match (self, other) {
            (Radial::NoGup { .. }, Radial::NoGup { .. }) => {
                let p_cut = (2.0 * GAUSSIAN_TAIL_CUT * lambda).sqrt();
                let f = |p: f64| {
                    let a = self.value(p).unwrap_or(0.0);
                    let b = other.value(p).unwrap_or(0.0);
                    a * b * p
                };
                Ok(quadrature::adaptive(f, 0.0, p_cut, QUADRATURE_REL_TOL)?.value)
            }
            (
                Radial::Gup { beta, pt: pa, poly: fa },
                Radial::Gup { pt: pb, poly: fb, .. },
            ) => {
                // p dp / (1 + beta p^2) = dz / (2 beta (1 - z)), p^{-1} = sqrt(beta (1-z)/z)
                let flat_extra = match measure {
                    Measure::Deformed => 0.0,
                    Measure::Flat => 1.0,
                };
                let e_z = 0.5 * (pa.zeta1 + pb.zeta1) - 0.5;
                let e_w = 0.5 * (pa.zeta2 + pb.zeta2) - 0.5 - flat_extra;
                let f = |z: f64| z.powf(e_z) * (1.0 - z).powf(e_w) * fa.eval(z) * fb.eval(z);
                let q = quadrature::adaptive(f, 0.0, 1.0, QUADRATURE_REL_TOL)?;
                Ok(q.value / (2.0 * beta.sqrt()))
            }
            _ => Err(Error::GridMismatch(
                "overlap between deformed and undeformed states".into(),
            )),
        }
    }
}

/// Computes the normalization constant `C > 0` from scratch.
pub fn normalize(state: &StateSpec) -> Result<f64> {
    let radial = Radial::new(state)?;
    let integral = radial.weighted_integral(&radial, state.params.lambda, state.measure)?;
    Ok(1.0 / (2.0 * PI * integral).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct CacheKey {
    n: u32,
    j: i32,
    mode: Mode,
    variant: Variant,
    measure: Measure,
    allow_j0: bool,
    params: [u64; 5],
}

impl From<&StateSpec> for CacheKey {
    fn from(s: &StateSpec) -> Self {
        let p = &s.params;
        CacheKey {
            n: s.qn.n,
            j: s.qn.j,
            mode: s.mode,
            variant: s.variant,
            measure: s.measure,
            allow_j0: s.allow_j0,
            params: [p.m0, p.omega, p.hbar, p.c, p.beta].map(f64::to_bits),
        }
    }
}

/// Normalization constants keyed by state. Concurrent writers may race on
/// the same key; they store the same value, so the last write wins harmlessly.
#[derive(Debug, Default)]
pub struct NormCache {
    map: RwLock<HashMap<CacheKey, f64>>,
}

impl NormCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static NormCache {
        static CACHE: OnceLock<NormCache> = OnceLock::new();
        CACHE.get_or_init(NormCache::new)
    }

    pub fn get_or_compute(&self, state: &StateSpec) -> Result<f64> {
        let key = CacheKey::from(state);
        if let Some(&c) = self.map.read().expect("cache lock").get(&key) {
            return Ok(c);
        }
        let c = normalize(state)?;
        self.map.write().expect("cache lock").insert(key, c);
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.map.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveSample {
    pub p: f64,
    pub theta_angle: f64,
    pub value: Complex64,
}

/// A normalized eigenfunction ready for evaluation.
#[derive(Debug, Clone)]
pub struct Wavefunction {
    state: StateSpec,
    radial: Radial,
    norm: f64,
}

impl Wavefunction {
    pub fn new(state: StateSpec) -> Result<Self> {
        Self::with_cache(state, NormCache::global())
    }

    pub fn with_cache(state: StateSpec, cache: &NormCache) -> Result<Self> {
        let radial = Radial::new(&state)?;
        let norm = cache.get_or_compute(&state)?;
        Ok(Wavefunction { state, radial, norm })
    }

    /// Unnormalized radial part with unit constant, for callers that
    /// handle normalization themselves.
    pub fn unnormalized(state: StateSpec) -> Result<Self> {
        let radial = Radial::new(&state)?;
        Ok(Wavefunction {
            state,
            radial,
            norm: 1.0,
        })
    }

    pub fn state(&self) -> &StateSpec {
        &self.state
    }

    pub fn norm_constant(&self) -> f64 {
        self.norm
    }

    /// Real radial amplitude including the normalization constant.
    pub fn radial(&self, p: f64) -> Result<f64> {
        Ok(self.norm * self.radial.value(p)?)
    }

    pub fn psi(&self, p: f64, theta_angle: f64) -> Result<Complex64> {
        let phase = f64::from(self.state.qn.abs_j()) * theta_angle;
        Ok(Complex64::from_polar(1.0, phase) * self.radial(p)?)
    }

    pub fn sample(&self, p: f64, theta_angle: f64) -> Result<WaveSample> {
        Ok(WaveSample {
            p,
            theta_angle,
            value: self.psi(p, theta_angle)?,
        })
    }

    /// `int psi_self^* psi_other dmu`, using `self`'s measure.
    pub fn overlap(&self, other: &Wavefunction) -> Result<f64> {
        if self.state.qn.abs_j() != other.state.qn.abs_j() {
            // angular integral of e^{i(|j'|-|j|)phi} vanishes
            return Ok(0.0);
        }
        let integral =
            self.radial
                .weighted_integral(&other.radial, self.state.params.lambda, self.state.measure)?;
        Ok(2.0 * PI * self.norm * other.norm * integral)
    }
}

pub fn psi_no_gup(
    qn: QuantumNumbers,
    params: &ModelParams,
    p: f64,
    theta_angle: f64,
) -> Result<Complex64> {
    Wavefunction::new(StateSpec::no_gup(qn, *params))?.psi(p, theta_angle)
}

pub fn psi_gup(
    qn: QuantumNumbers,
    params: &ModelParams,
    p: f64,
    theta_angle: f64,
    variant: Variant,
) -> Result<Complex64> {
    if !(p > 0.0) {
        return Err(Error::NonPositiveMomentum(p));
    }
    Wavefunction::new(StateSpec::gup(qn, *params, variant))?.psi(p, theta_angle)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub norm_constant: f64,
}

pub fn radial_profile(wf: &Wavefunction, grid: &[f64]) -> Result<RadialProfile> {
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidGrid("profile grid must be strictly increasing".into()));
    }
    let values = grid.iter().map(|&p| wf.radial(p)).collect::<Result<Vec<_>>>()?;
    Ok(RadialProfile {
        grid: grid.to_vec(),
        values,
        norm_constant: wf.norm_constant(),
    })
}

/// Grid that resolves the state: uniform in `z` over `(0, 1)` for the
/// deformed problem, uniform in `p` up to the Gaussian tail cut otherwise.
/// Endpoints are excluded.
pub fn default_profile_grid(state: &StateSpec, points: usize) -> Result<Vec<f64>> {
    let m = points as f64 + 1.0;
    match state.mode {
        Mode::NoGup => {
            let p_cut = (2.0 * GAUSSIAN_TAIL_CUT * state.params.lambda).sqrt();
            Ok((1..=points).map(|i| p_cut * i as f64 / m).collect())
        }
        Mode::Gup => (1..=points)
            .map(|i| p_of_z(i as f64 / m, &state.params))
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NodeCount {
    pub nodes: usize,
    /// Two sign changes were fewer than 3 samples apart.
    pub grid_too_coarse: bool,
}

/// Strict sign changes of the radial values, skipping exact zeros.
pub fn count_radial_nodes(profile: &RadialProfile) -> NodeCount {
    let mut nodes = 0;
    let mut grid_too_coarse = false;
    let mut last_sign = 0.0;
    let mut last_change: Option<usize> = None;
    for (i, &v) in profile.values.iter().enumerate() {
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        let sign = v.signum();
        if last_sign != 0.0 && sign != last_sign {
            nodes += 1;
            if let Some(prev) = last_change {
                if i - prev < 3 {
                    grid_too_coarse = true;
                }
            }
            last_change = Some(i);
        }
        last_sign = sign;
    }
    NodeCount {
        nodes,
        grid_too_coarse,
    }
}

/// `varsigma = (E^2 - m0^2 c^4)/c^2` for a state, from its canonical energy.
pub fn canonical_varsigma(state: &StateSpec) -> Result<f64> {
    let e = spectrum::energy(
        &state.params,
        state.qn,
        state.mode,
        state.variant,
        state.allow_j0,
    )?;
    Ok((e.plus * e.plus - 1.0) * state.params.rest_momentum_sq())
}

// Eighth-order central stencils.
const D1: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
const D2_CENTER: f64 = -205.0 / 72.0;
const D2: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];
const STEP_FRACTION: f64 = 2e-3;

fn derivatives<F: Fn(f64) -> Result<f64>>(f: &F, p: f64, h: f64) -> Result<(f64, f64, f64)> {
    let f0 = f(p)?;
    let mut d1 = 0.0;
    let mut d2 = D2_CENTER * f0;
    for k in 0..4 {
        let off = (k + 1) as f64 * h;
        let plus = f(p + off)?;
        let minus = f(p - off)?;
        d1 += D1[k] * (plus - minus);
        d2 += D2[k] * (plus + minus);
    }
    Ok((f0, d1 / h, d2 / (h * h)))
}

/// Local length over which the radial function varies appreciably.
fn local_scale(state: &StateSpec, p: f64) -> f64 {
    let level = f64::from(state.qn.principal()) + 2.0;
    match state.mode {
        Mode::NoGup => p.min((state.params.lambda / level).sqrt()),
        Mode::Gup => {
            let beta = state.params.beta;
            let s = 1.0 / state.params.theta + level;
            p.min((1.0 + beta * p * p) / (beta.sqrt() * s))
        }
    }
}

/// Maximum over `points` of `|ODE residual| / max |ODE term|` using the
/// canonical energy of the state.
pub fn ode_residual(state: &StateSpec, points: &[f64]) -> Result<f64> {
    ode_residual_with_varsigma(state, canonical_varsigma(state)?, points)
}

/// As [`ode_residual`] with an explicit `varsigma`, so that non-quantized
/// or alternative energies can be plugged in.
pub fn ode_residual_with_varsigma(state: &StateSpec, varsigma: f64, points: &[f64]) -> Result<f64> {
    let wf = Wavefunction::unnormalized(*state)?;
    let f = |p: f64| wf.radial(p);
    let lambda = state.params.lambda;
    let beta = state.params.beta;
    let j_sq = f64::from(state.qn.j) * f64::from(state.qn.j);
    let mut worst: f64 = 0.0;
    for &p in points {
        let h = STEP_FRACTION * local_scale(state, p);
        let (v, d1, d2) = derivatives(&f, p, h)?;
        let terms: Vec<f64> = match state.mode {
            Mode::NoGup => {
                // f'' + f'/p - j^2 f/p^2 + (kappa^2 - k^2 p^2) f
                let kappa_sq = (2.0 * lambda + varsigma) / (lambda * lambda);
                vec![
                    d2,
                    d1 / p,
                    -j_sq * v / (p * p),
                    kappa_sq * v,
                    -p * p * v / (lambda * lambda),
                ]
            }
            Mode::Gup => {
                // -a h'' + b h' + (c - varsigma) h
                let w = 1.0 + beta * p * p;
                let a = lambda * lambda * w * w;
                vec![
                    -a * d2,
                    -a / p * d1,
                    -2.0 * beta * lambda * lambda * w * p * d1,
                    p * p * v,
                    j_sq * a / (p * p) * v,
                    -2.0 * lambda * w * v,
                    -varsigma * v,
                ]
            }
        };
        let sum: f64 = terms.iter().sum();
        let scale = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        if scale > 0.0 {
            worst = worst.max(sum.abs() / scale);
        }
    }
    Ok(worst)
}

/// Interior sample points away from `p = 0` and from the far tail.
pub fn interior_samples(state: &StateSpec, count: usize) -> Result<Vec<f64>> {
    let m = count as f64 - 1.0;
    match state.mode {
        Mode::NoGup => {
            let scale = state.params.lambda.sqrt();
            Ok((0..count)
                .map(|i| scale * (0.05 + 4.45 * i as f64 / m.max(1.0)))
                .collect())
        }
        Mode::Gup => (0..count)
            .map(|i| p_of_z(0.01 + 0.94 * i as f64 / m.max(1.0), &state.params))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::make_params;

    fn qn(n: u32, j: i32) -> QuantumNumbers {
        QuantumNumbers { n, j }
    }

    #[test]
    fn coordinate_maps() {
        let p = make_params(1.0, 1.0, 1.0, 1.0, 0.3).unwrap();
        let sb = p.beta.sqrt();
        assert_eq!(map_q_of_p(0.0, &p).unwrap(), 0.0);
        let q = map_q_of_p(1.0 / sb, &p).unwrap();
        assert!((q - PI / (4.0 * p.lambda * sb)).abs() < 1e-15);
        let q = map_q_of_p(1e12, &p).unwrap();
        assert!((q - PI / (2.0 * p.lambda * sb)).abs() < 1e-10);

        assert_eq!(map_z_of_p(0.0, &p).unwrap(), 0.0);
        assert!((map_z_of_p(1.0 / sb, &p).unwrap() - 0.5).abs() < 1e-15);
        let flat = make_params(1.0, 1.0, 1.0, 1.0, 0.0).unwrap();
        assert_eq!(map_q_of_p(1.0, &flat), Err(Error::BetaZero));
        assert_eq!(map_z_of_p(1.0, &flat), Err(Error::BetaZero));
    }

    #[test]
    fn trig_and_algebraic_z_agree() {
        let p = make_params(1.3, 0.7, 1.1, 2.0, 0.4).unwrap();
        let mut prev = -1.0;
        for i in 0..200 {
            let mom = 0.05 * i as f64;
            let z = map_z_of_p(mom, &p).unwrap();
            let s = (p.alpha * map_q_of_p(mom, &p).unwrap()).sin();
            assert!((z - s * s).abs() < 1e-14);
            assert!(z > prev && z < 1.0);
            prev = z;
            if mom > 0.0 {
                assert!((p_of_z(z, &p).unwrap() - mom).abs() < 1e-12 * mom.max(1.0));
            }
        }
    }

    #[test]
    fn gaussian_ground_state() {
        let p = make_params(1.0, 2.0, 1.0, 1.0, 0.0).unwrap();
        let state = StateSpec::no_gup(qn(0, 0), p);
        let c = normalize(&state).unwrap();
        let exact = 1.0 / (PI * p.lambda).sqrt();
        assert!((c - exact).abs() < 1e-10 * exact);
        let wf = Wavefunction::new(state).unwrap();
        for &mom in &[0.0, 0.5, 2.0] {
            let v = wf.psi(mom, 0.3).unwrap();
            let expected = exact * (-mom * mom / (2.0 * p.lambda)).exp();
            assert!((v.norm() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn no_gup_shape_facts() {
        let p = make_params(1.0, 1.5, 1.0, 1.0, 0.0).unwrap();
        let wf = Wavefunction::unnormalized(StateSpec::no_gup(qn(1, 0), p)).unwrap();
        // node at p^2 = lambda (|j| + 1)
        assert!(wf.radial(p.lambda.sqrt()).unwrap().abs() < 1e-15);
        let wf = Wavefunction::unnormalized(StateSpec::no_gup(qn(0, 2), p)).unwrap();
        assert_eq!(wf.radial(0.0).unwrap(), 0.0);
    }

    #[test]
    fn gup_shape_facts() {
        let p = ModelParams::from_dimensionless(1.0, 0.3).unwrap();
        let state = StateSpec::gup(qn(0, 2), p, Variant::Eq60);
        let wf = Wavefunction::unnormalized(state).unwrap();
        assert_eq!(wf.radial(0.0), Err(Error::NonPositiveMomentum(0.0)));
        // |psi| ~ p^|j| near the origin
        let a = wf.radial(1e-4).unwrap();
        let b = wf.radial(2e-4).unwrap();
        assert!(((b / a).log2() - 2.0).abs() < 1e-6);
        // decays like p^{-(zeta2 + 1/2)}
        let pt = spectrum::pt_parameters(0.3, 2, Variant::Eq60, false).unwrap();
        let a = wf.radial(1e4).unwrap();
        let b = wf.radial(2e4).unwrap();
        assert!(((a / b).log2() - (pt.zeta2 + 0.5)).abs() < 1e-6);
        assert!(matches!(
            psi_gup(qn(0, 1), &p, -1.0, 0.0, Variant::Eq60),
            Err(Error::NonPositiveMomentum(_))
        ));
    }

    #[test]
    fn angular_factor_has_unit_modulus() {
        let p = ModelParams::from_dimensionless(0.5, 0.2).unwrap();
        let wf = Wavefunction::new(StateSpec::gup(qn(1, -2), p, Variant::Eq60)).unwrap();
        let a = wf.psi(0.7, 0.0).unwrap();
        for k in 1..12 {
            let b = wf.psi(0.7, k as f64 * 0.5).unwrap();
            assert_eq!(a.norm(), b.norm());
        }
    }

    #[test]
    fn cache_is_populated_once() {
        let cache = NormCache::new();
        let p = ModelParams::from_dimensionless(0.5, 0.2).unwrap();
        let s = StateSpec::gup(qn(1, 1), p, Variant::Eq60);
        let a = Wavefunction::with_cache(s, &cache).unwrap().norm_constant();
        let b = Wavefunction::with_cache(s, &cache).unwrap().norm_constant();
        assert_eq!(a, b);
        assert_eq!(cache.len(), 1);
    }

    #[test]
    fn node_counter() {
        let profile = RadialProfile {
            grid: (0..10).map(f64::from).collect(),
            values: vec![1.0, 0.5, 0.0, -0.5, -1.0, -0.5, 0.5, 1.0, -1.0, -2.0],
            norm_constant: 1.0,
        };
        let c = count_radial_nodes(&profile);
        assert_eq!(c.nodes, 3);
        assert!(c.grid_too_coarse);
    }

    #[test]
    fn negative_control_off_shell_energy() {
        let p = make_params(1.0, 1.0, 1.0, 1.0, 0.0).unwrap();
        let state = StateSpec::no_gup(qn(1, 1), p);
        let pts = interior_samples(&state, 50).unwrap();
        let on = ode_residual(&state, &pts).unwrap();
        let sigma = canonical_varsigma(&state).unwrap();
        let off = ode_residual_with_varsigma(&state, sigma + 0.1, &pts).unwrap();
        assert!(on < 1e-8, "{on}");
        assert!(off > 1e-3, "{off}");
    }
}
