//! Energies across the deformation: from the harmonic ladder at theta = 0 to
//! the hard-confinement regime, where E^2 grows like n^2 instead of n.
//!
//! $ cargo run --example hard_confinement_sweep

use kg_oscillator::spectrum::{gup_energy_chain, no_gup_energy};
use kg_oscillator::{QuantumNumbers, Variant};

fn main() -> kg_oscillator::Result<()> {
    let r = 0.2;
    let thetas = [0.0, 0.01, 0.1, 0.3, 0.6, 0.9];
    print!(" n ");
    for t in thetas {
        print!("  theta={t:<5}");
    }
    println!();
    for n in 0..=6 {
        let qn = QuantumNumbers { n, j: 1 };
        print!("{n:2} ");
        for &theta in &thetas {
            let e = if theta == 0.0 {
                no_gup_energy(r, qn).plus
            } else {
                gup_energy_chain(r, theta, qn, Variant::Eq60, false)?.plus
            };
            print!("  {e:11.6}");
        }
        println!();
    }

    // second differences of E^2 in n: 0 for the ladder, 8 r theta once deformed
    println!("\nsecond difference of E^2 in n (j = 1):");
    for &theta in &thetas[1..] {
        let e2 = |n: u32| -> kg_oscillator::Result<f64> {
            Ok(gup_energy_chain(r, theta, QuantumNumbers { n, j: 1 }, Variant::Eq60, false)?.plus.powi(2))
        };
        let d2 = e2(12)? - 2.0 * e2(11)? + e2(10)?;
        println!("  theta = {theta:<5} {d2:.6}  (8 r theta = {:.6})", 8.0 * r * theta);
    }
    Ok(())
}
