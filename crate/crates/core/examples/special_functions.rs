//! Terminating hypergeometric polynomials used by the wavefunctions.
//!
//! $ cargo run --example special_functions

use kg_oscillator::specfun::{gauss2f1_poly, hyp2f1_partial_sum, kummer_poly, pochhammer, PolySeries};

fn main() -> kg_oscillator::Result<()> {
    println!("(-2)_2 = {}, (-2)_3 = {}", pochhammer(-2.0, 2), pochhammer(-2.0, 3));
    println!("1F1(-2; 1; 1) = {}", kummer_poly(2, 1.0, 1.0)?);
    println!("2F1(-1, 2; 4; 0.5) = {}", gauss2f1_poly(1, 2.0, 4.0, 0.5)?);

    let series = PolySeries::gauss(4, 3.5, 2.5)?;
    println!("\n2F1(-4, 3.5; 2.5; z) coefficients: {:?}", series.coefficients);
    for z in [0.0, 0.25, 0.5, 0.75, 1.0] {
        println!(
            "  z = {z:4}: {:+.15e}  (five extra terms: {:+.15e})",
            series.eval(z),
            hyp2f1_partial_sum(-4.0, 3.5, 2.5, z, 10)
        );
    }

    // 1F1(-n; m+1; x) is a scaled generalized Laguerre polynomial
    let (n, m, x) = (9u32, 8u32, 5.0);
    println!("\n1F1(-{n}; {}; {x}) = {:.17e}", m + 1, kummer_poly(n, f64::from(m) + 1.0, x)?);
    Ok(())
}
