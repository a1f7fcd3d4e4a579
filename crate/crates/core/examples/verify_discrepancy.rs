//! Oracle verification of the spectrum, including two readings that fail:
//! the literal closed form and the `eq69` root.
//!
//! $ cargo run --example verify_discrepancy

use kg_oscillator::oracle::verify_spectrum;
use kg_oscillator::{Mode, ModelParams, Variant};

fn main() -> kg_oscillator::Result<()> {
    let params = ModelParams::from_dimensionless(0.2, 0.3)?;
    let report = verify_spectrum(&params, 2, 2, Mode::Gup, Variant::Eq60, false, 1e-5);
    println!(" n  j   oracle           chain            printed          |chain-oracle|  |printed-oracle|");
    for row in &report.rows {
        println!(
            "{:2} {:2}   {:.12}   {:.12}   {:.12}   {:.1e}         {:.3e}",
            row.n,
            row.j,
            row.oracle_e.unwrap_or(f64::NAN),
            row.chain_e.unwrap_or(f64::NAN),
            row.eq70_e.unwrap_or(f64::NAN),
            row.rel_diff_chain.unwrap_or(f64::NAN),
            row.rel_diff_eq70.unwrap_or(f64::NAN),
        );
    }
    println!("all rows pass: {}", report.all_pass);

    let eq69 = verify_spectrum(&params, 1, 1, Mode::Gup, Variant::Eq69, false, 1e-5);
    if let Some(limit) = &eq69.limit_check {
        println!("\neq69 reading: limit check pass = {}", limit.pass);
        println!("  {}", limit.note);
    }
    Ok(())
}
