//! Spectra and momentum-space wavefunctions of the two-dimensional
//! Klein–Gordon oscillator, with and without a minimal-length deformation
//! `[x, p] = i hbar (1 + beta p^2)`.
//!
//! * [`model`]: physical parameters, the `(r, theta)` reduction, quantum numbers.
//! * [`specfun`]: terminating `1F1` and `2F1` polynomials.
//! * [`spectrum`]: closed-form spectra, including a literal closed form that
//!   the oracle rejects.
//! * [`wavefn`]: eigenfunctions, normalization, node counts, ODE residuals.
//! * [`oracle`]: finite-difference eigenvalue oracle and verification sweeps.
//! * [`cli`]: the `kgosc` command line (spectrum, wavefn, verify, sweep).

pub mod cli;
pub mod error;
pub mod model;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;
pub mod wavefn;

pub use error::{Error, Result};
pub use model::{
    make_params, make_quantum_numbers, Branch, EnergyLevel, EnergyPair, EnergySource, Mode,
    ModelParams, QuantumNumbers, Variant,
};
