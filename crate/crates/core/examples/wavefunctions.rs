//! Normalized momentum-space wavefunctions, node counts and ODE residuals.
//!
//! $ cargo run --example wavefunctions

use kg_oscillator::wavefn::{
    count_radial_nodes, default_profile_grid, interior_samples, ode_residual, radial_profile, Measure, StateSpec,
    Wavefunction,
};
use kg_oscillator::{ModelParams, QuantumNumbers, Variant};

fn main() -> kg_oscillator::Result<()> {
    let params = ModelParams::from_dimensionless(0.2, 0.3)?;
    println!(" n  j   C               nodes  residual   <n|0>");
    for j in 1..=2 {
        let ground = Wavefunction::new(StateSpec::gup(QuantumNumbers { n: 0, j }, params, Variant::Eq60))?;
        for n in 0..=3 {
            let state = StateSpec::gup(QuantumNumbers { n, j }, params, Variant::Eq60);
            let wf = Wavefunction::new(state)?;
            let profile = radial_profile(&wf, &default_profile_grid(&state, 512)?)?;
            let nodes = count_radial_nodes(&profile).nodes;
            let residual = ode_residual(&state, &interior_samples(&state, 50)?)?;
            let overlap = wf.overlap(&ground)?;
            println!("{n:2} {j:2}   {:.9e}  {nodes:5}  {residual:.2e}  {overlap:+.1e}", wf.norm_constant());
        }
    }

    let state = StateSpec::gup(QuantumNumbers { n: 1, j: 1 }, params, Variant::Eq60);
    let flat = StateSpec { measure: Measure::Flat, ..state };
    println!(
        "\nn=1 j=1: C = {:.9} (deformed measure), {:.9} (flat measure)",
        Wavefunction::new(state)?.norm_constant(),
        Wavefunction::new(flat)?.norm_constant()
    );

    let wf = Wavefunction::new(state)?;
    println!("\npsi(p, 0.7) for n=1 j=1:");
    for p in [0.1, 0.5, 1.0, 2.0, 5.0, 20.0] {
        let psi = wf.psi(p, 0.7)?;
        println!("  p = {p:5}: {:+.6e} {:+.6e}i", psi.re, psi.im);
    }
    Ok(())
}
