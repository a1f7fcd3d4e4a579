//! Finite-difference oracle: Sturm bisection on tridiagonal operators and
//! Richardson extrapolation over a grid-doubling pair.
//!
//! $ cargo run --example pt_oracle

use kg_oscillator::oracle::{
    build_pt_operator, convergence_order, eigen_on_grid, pt_grid, pt_oracle, radial_grid, radial_oracle,
    PtPotential,
};
use kg_oscillator::spectrum::pt_parameters;
use kg_oscillator::{ModelParams, Variant};

fn main() -> kg_oscillator::Result<()> {
    let params = ModelParams::from_dimensionless(0.2, 0.3)?;
    let pt = pt_parameters(0.3, 1, Variant::Eq60, false)?;
    let potential = PtPotential::from(&pt);
    let alpha = params.alpha;

    println!("raw lowest eigenvalue against the cell count:");
    let mut raw = Vec::new();
    for m in [256, 512, 1024, 2048] {
        let grid = pt_grid(alpha, m)?;
        let e = eigen_on_grid(&build_pt_operator(potential, alpha, &grid)?, &grid, 1)?.eigenvalues[0];
        println!("  {m:5}  {e:.12}");
        raw.push(e);
    }
    println!("observed order: {:.3}", convergence_order(raw[1], raw[2], raw[3]));

    let res = pt_oracle(potential, alpha, &pt_grid(alpha, 4096)?, 4)?;
    println!("\n n  extrapolated      closed form       rel. error estimate");
    for n in 0..4 {
        let exact = alpha * alpha * pt.level_index(n as u32).powi(2);
        println!(
            "{n:2}  {:.12}  {exact:.12}  {:.2e}",
            res.extrapolated[n],
            res.error_estimate[n] / res.extrapolated[n]
        );
    }

    let radial = radial_oracle(1.0, 2, &radial_grid(1.0, 2048)?, 3)?;
    println!("\nundeformed radial problem, lambda = 1, j = 2: kappa^2 = {:?}", radial.extrapolated);
    Ok(())
}
