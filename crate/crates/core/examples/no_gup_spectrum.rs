//! Undeformed oscillator: E = ±sqrt(1 + 2rN) and its N-fold degeneracy.
//!
//! $ cargo run --example no_gup_spectrum

use kg_oscillator::spectrum::{enumerate_states, no_gup_energy};
use kg_oscillator::{make_params, make_quantum_numbers, Mode};

fn main() -> kg_oscillator::Result<()> {
    // m0 = hbar = 1, omega = 0.5, c = 1  =>  lambda = 0.5, r = 0.5
    let params = make_params(1.0, 0.5, 1.0, 1.0, 0.0)?;
    println!("lambda = {}, r = {}", params.lambda, params.r);

    let qn = make_quantum_numbers(1, 1, false, false)?;
    let e = no_gup_energy(params.r, qn);
    println!("n=1 j=1 (N={}): E = {:+} / {:+}", qn.principal(), e.plus, e.minus);

    println!("\n N  states  E_plus");
    let states = enumerate_states(4, 8, Mode::NoGup, false);
    for big_n in 0..=4 {
        let level: Vec<_> = states.iter().filter(|q| q.principal() == big_n).collect();
        let e = no_gup_energy(params.r, *level[0]).plus;
        let labels: Vec<String> = level.iter().map(|q| format!("({},{})", q.n, q.j)).collect();
        println!("{big_n:2}  {:2}      {e:.12}  {}", level.len(), labels.join(" "));
    }
    Ok(())
}
