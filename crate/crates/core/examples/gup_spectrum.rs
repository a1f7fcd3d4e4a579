//! Minimal-length spectrum: Pöschl–Teller parameters, the quantization chain,
//! and the comparison with the literal closed form.
//!
//! $ cargo run --example gup_spectrum

use kg_oscillator::spectrum::{
    gup_energy_chain, gup_energy_eq70_printed, no_gup_energy, pt_parameters, spectrum_table,
};
use kg_oscillator::{Mode, ModelParams, QuantumNumbers, Variant};

fn main() -> kg_oscillator::Result<()> {
    let (r, theta) = (0.2, 0.3);
    let params = ModelParams::from_dimensionless(r, theta)?;
    println!("r = {r}, theta = {theta}, beta = {}, alpha = {}", params.beta, params.alpha);

    for j in 1..=3 {
        let pt = pt_parameters(theta, j, Variant::Eq60, false)?;
        println!(
            "j={j}: zeta1 = {:.6}  zeta2 = {:.6}  Sigma = {:.6}",
            pt.zeta1, pt.zeta2, pt.sigma
        );
    }

    println!("\n n  j   E_chain          E_printed        E_undeformed");
    for row in spectrum_table(&params, 2, 2, Mode::Gup, Variant::Eq60, false).rows {
        let qn = row.qn;
        let chain = row.energies?.plus;
        let printed = gup_energy_eq70_printed(r, theta, qn, false)?.plus;
        let flat = no_gup_energy(r, qn).plus;
        println!("{:2} {:2}   {chain:.12}   {printed:.12}   {flat:.12}", qn.n, qn.j);
    }

    let qn = QuantumNumbers { n: 1, j: 1 };
    println!("\nvanishing deformation, n=1 j=1:");
    for theta in [1e-1, 1e-3, 1e-6, 1e-9] {
        let eq60 = gup_energy_chain(0.5, theta, qn, Variant::Eq60, false)?.plus;
        let eq69 = gup_energy_chain(0.5, theta, qn, Variant::Eq69, false)?.plus;
        println!("  theta = {theta:e}: eq60 {eq60:.10}  eq69 {eq69:.10}  (target 2)");
    }
    Ok(())
}
