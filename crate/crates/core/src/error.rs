use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the toolkit can report.
///
/// The `Display` output always starts with the variant name so that command
/// line messages and table flags can be matched verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonPositiveInput: {name} must be finite and positive (got {value})")]
    NonPositiveInput { name: &'static str, value: f64 },

    #[error("ThetaOutOfRange: beta*lambda = {0} must lie in [0, 1)")]
    ThetaOutOfRange(f64),

    #[error("NegativeRadialIndex: n = {0}")]
    NegativeRadialIndex(i64),

    #[error("ZeroAngularMomentumInGUP: j = 0 requires the extrapolation flag in GUP mode")]
    ZeroAngularMomentumInGUP,

    #[error("DegenerateDenominator: lower parameter {0} is a non-positive integer inside the truncated series")]
    DegenerateDenominator(f64),

    #[error("ImaginaryEnergy: E^2/(m0 c^2)^2 = {0} < 0")]
    ImaginaryEnergy(f64),

    #[error("BetaZero: the q and z coordinates need beta > 0")]
    BetaZero,

    #[error("NonPositiveMomentum: GUP wavefunction needs p > 0 (got {0})")]
    NonPositiveMomentum(f64),

    #[error("QuadratureNonConvergent: estimated error {estimate:e} above tolerance after {panels} panels")]
    QuadratureNonConvergent { estimate: f64, panels: usize },

    #[error("DomainContainsPole: grid [{lower}, {upper}] leaves (0, {pole})")]
    DomainContainsPole { lower: f64, upper: f64, pole: f64 },

    #[error("DomainTooSmall: p_max = {p_max} but at least {required} is needed")]
    DomainTooSmall { p_max: f64, required: f64 },

    #[error("BisectionStall: eigenvalue {index} not isolated within {iterations} iterations")]
    BisectionStall { index: usize, iterations: usize },

    #[error("GridMismatch: {0}")]
    GridMismatch(String),

    #[error("InvalidGrid: {0}")]
    InvalidGrid(String),
}

impl Error {
    /// Short machine-readable name, used as `error_flag` in tables.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonPositiveInput { .. } => "NonPositiveInput",
            Error::ThetaOutOfRange(_) => "ThetaOutOfRange",
            Error::NegativeRadialIndex(_) => "NegativeRadialIndex",
            Error::ZeroAngularMomentumInGUP => "ZeroAngularMomentumInGUP",
            Error::DegenerateDenominator(_) => "DegenerateDenominator",
            Error::ImaginaryEnergy(_) => "ImaginaryEnergy",
            Error::BetaZero => "BetaZero",
            Error::NonPositiveMomentum(_) => "NonPositiveMomentum",
            Error::QuadratureNonConvergent { .. } => "QuadratureNonConvergent",
            Error::DomainContainsPole { .. } => "DomainContainsPole",
            Error::DomainTooSmall { .. } => "DomainTooSmall",
            Error::BisectionStall { .. } => "BisectionStall",
            Error::GridMismatch(_) => "GridMismatch",
            Error::InvalidGrid(_) => "InvalidGrid",
        }
    }
}
