//! Physical inputs, their dimensionless reduction, and quantum numbers.
//!
//! Everything downstream works with the pair `(r, theta)`:
//!
//! * `lambda = m0 * omega * hbar` is the squared oscillator momentum scale,
//! * `r = hbar * omega / (m0 c^2)` is the relativistic oscillator strength,
//! * `theta = beta * lambda` is the dimensionless deformation,
//! * `alpha = lambda * sqrt(beta)` sets the Pöschl–Teller length scale.
//!
//! Energies are always reported in units of `m0 c^2`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Whether the Heisenberg algebra is deformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    NoGup,
    Gup,
}

/// Root convention for the cosine-barrier exponent `zeta2`.
///
/// `Eq60` is `1/2 + (1/theta - 1) Sigma`, the root of the defining quadratic.
/// `Eq69` is the alternative reading `1/2 + 1/2 + (1/theta - 1) Sigma`; it
/// does not satisfy the quadratic and carries an excess constant in the
/// `theta -> 0` limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Eq60,
    Eq69,
}

impl Variant {
    /// Constant part of `zeta2`.
    pub fn zeta2_offset(self) -> f64 {
        match self {
            Variant::Eq60 => 0.5,
            Variant::Eq69 => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub m0: f64,
    pub omega: f64,
    pub hbar: f64,
    pub c: f64,
    pub beta: f64,
    pub lambda: f64,
    pub r: f64,
    pub theta: f64,
    pub alpha: f64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NonPositiveInput { name, value })
    }
}

/// Validates the physical inputs and fills in the derived groups.
pub fn make_params(m0: f64, omega: f64, hbar: f64, c: f64, beta: f64) -> Result<ModelParams> {
    let m0 = positive("m0", m0)?;
    let omega = positive("omega", omega)?;
    let hbar = positive("hbar", hbar)?;
    let c = positive("c", c)?;
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::NonPositiveInput { name: "beta", value: beta });
    }
    let lambda = m0 * omega * hbar;
    let r = hbar * omega / (m0 * c * c);
    let theta = beta * lambda;
    if theta >= 1.0 {
        return Err(Error::ThetaOutOfRange(theta));
    }
    Ok(ModelParams {
        m0,
        omega,
        hbar,
        c,
        beta,
        lambda,
        r,
        theta,
        alpha: lambda * beta.sqrt(),
    })
}

impl ModelParams {
    /// Natural-unit realisation of a dimensionless pair: `m0 = hbar = c = 1`,
    /// `omega = r`, hence `lambda = r` and `beta = theta / r`.
    pub fn from_dimensionless(r: f64, theta: f64) -> Result<Self> {
        let r = positive("r", r)?;
        if !(theta.is_finite() && theta >= 0.0) {
            return Err(Error::NonPositiveInput { name: "theta", value: theta });
        }
        if theta >= 1.0 {
            return Err(Error::ThetaOutOfRange(theta));
        }
        make_params(1.0, r, 1.0, 1.0, theta / r)
    }

    /// `m0^2 c^2`, the unit that turns `varsigma` into `E^2/(m0 c^2)^2 - 1`.
    pub fn rest_momentum_sq(&self) -> f64 {
        self.m0 * self.m0 * self.c * self.c
    }

    /// `E/(m0 c^2)` squared for a given `varsigma = (E^2 - m0^2 c^4)/c^2`.
    pub fn energy_sq_from_varsigma(&self, varsigma: f64) -> f64 {
        1.0 + varsigma / self.rest_momentum_sq()
    }

    pub fn mode(&self) -> Mode {
        if self.beta > 0.0 {
            Mode::Gup
        } else {
            Mode::NoGup
        }
    }
}

/// Radial index `n` and angular index `j` (written `l` for the undeformed
/// problem; the two are the same quantum number).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub j: i32,
}

impl QuantumNumbers {
    /// Principal number `N = 2n + |j|`.
    pub fn principal(&self) -> u32 {
        2 * self.n + self.j.unsigned_abs()
    }

    pub fn abs_j(&self) -> u32 {
        self.j.unsigned_abs()
    }
}

pub fn make_quantum_numbers(
    n: i64,
    j: i64,
    gup_mode: bool,
    allow_extrapolation: bool,
) -> Result<QuantumNumbers> {
    if n < 0 {
        return Err(Error::NegativeRadialIndex(n));
    }
    if gup_mode && j == 0 && !allow_extrapolation {
        return Err(Error::ZeroAngularMomentumInGUP);
    }
    let n = u32::try_from(n).map_err(|_| Error::NegativeRadialIndex(n))?;
    let j = i32::try_from(j).map_err(|_| Error::NonPositiveInput {
        name: "j",
        value: j as f64,
    })?;
    Ok(QuantumNumbers { n, j })
}

/// Where an energy value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EnergySource {
    #[serde(rename = "nogup_closed")]
    NoGupClosed,
    #[serde(rename = "gup_chain")]
    GupChain,
    #[serde(rename = "gup_eq70_printed")]
    GupEq70Printed,
    #[serde(rename = "oracle")]
    Oracle,
}

impl EnergySource {
    pub fn as_str(self) -> &'static str {
        match self {
            EnergySource::NoGupClosed => "nogup_closed",
            EnergySource::GupChain => "gup_chain",
            EnergySource::GupEq70Printed => "gup_eq70_printed",
            EnergySource::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// A single dimensionless energy `E/(m0 c^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    pub value: f64,
    pub branch: Branch,
    pub source: EnergySource,
}

/// The symmetric pair `(E+, E-)` obtained from a non-negative `E^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyPair {
    pub plus: f64,
    pub minus: f64,
    pub source: EnergySource,
}

impl EnergyPair {
    pub fn from_energy_sq(energy_sq: f64, source: EnergySource) -> Result<Self> {
        if !(energy_sq >= 0.0) {
            return Err(Error::ImaginaryEnergy(energy_sq));
        }
        let e = energy_sq.sqrt();
        Ok(EnergyPair {
            plus: e,
            minus: -e,
            source,
        })
    }

    pub fn levels(&self) -> [EnergyLevel; 2] {
        [
            EnergyLevel {
                value: self.plus,
                branch: Branch::Plus,
                source: self.source,
            },
            EnergyLevel {
                value: self.minus,
                branch: Branch::Minus,
                source: self.source,
            },
        ]
    }
}
