//! The finite-difference oracle against exactly known spectra, and its
//! observed convergence behaviour.

use std::f64::consts::PI;

use kg_oscillator::oracle::verify::{energy_from_kappa_sq, oracle_energies};
use kg_oscillator::oracle::{
    build_pt_operator, build_radial_operator_no_gup, convergence_order, eigen_lowest, eigen_on_grid, pt_grid,
    pt_oracle, radial_grid, radial_oracle, richardson_pair, GridSpec, PtPotential, SymTridiagonal,
    DEFAULT_PT_POINTS, DEFAULT_RADIAL_POINTS,
};
use kg_oscillator::spectrum::{barrier_strengths, gup_energy_chain, pt_parameters};
use kg_oscillator::{make_params, Mode, ModelParams, QuantumNumbers, Variant};

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn laplacian(grid: &GridSpec) -> SymTridiagonal {
    let h = grid.spacing();
    let m = grid.points - 1;
    SymTridiagonal::new(vec![2.0 / (h * h); m], vec![-1.0 / (h * h); m - 1]).unwrap()
}

#[test]
fn laplacian_richardson_beats_the_fine_grid() {
    let coarse = GridSpec::new(0.0, PI, 512).unwrap();
    let fine = coarse.refined();
    let c = eigen_on_grid(&laplacian(&coarse), &coarse, 3).unwrap();
    let f = eigen_on_grid(&laplacian(&fine), &fine, 3).unwrap();
    let r = richardson_pair(&c, &f).unwrap();
    for k in 0..3 {
        let exact = ((k + 1) * (k + 1)) as f64;
        assert!((r.extrapolated[k] - exact).abs() < (f.eigenvalues[k] - exact).abs());
    }
    assert!((r.extrapolated[0] - 1.0).abs() < 1e-10);
}

#[test]
fn bare_two_by_two() {
    let t = SymTridiagonal::new(vec![1.0, 3.0], vec![0.0]).unwrap();
    let r = eigen_lowest(&t, 2).unwrap();
    assert!((r.eigenvalues[0] - 1.0).abs() < 1e-12 && (r.eigenvalues[1] - 3.0).abs() < 1e-12);
    assert!(r.grid.is_none());
}

#[test]
fn box_and_exact_pt_levels() {
    let grid = pt_grid(1.0, 1024).unwrap();
    let flat = pt_oracle(PtPotential::from_zetas(1.0, 1.0), 1.0, &grid, 3).unwrap();
    for (k, exact) in [4.0, 16.0, 36.0].iter().enumerate() {
        assert!(rel(flat.extrapolated[k], *exact) < 1e-8, "{:?}", flat.extrapolated);
    }
    let barrier = pt_oracle(PtPotential::from_zetas(2.0, 2.0), 1.0, &grid, 1).unwrap();
    assert!(rel(barrier.extrapolated[0], 16.0) < 1e-6, "{}", barrier.extrapolated[0]);
}

#[test]
fn raw_eigenvalues_converge_at_second_order() {
    let pt = pt_parameters(0.3, 1, Variant::Eq60, false).unwrap();
    let params = ModelParams::from_dimensionless(0.2, 0.3).unwrap();
    let pt_raw: Vec<f64> = [512, 1024, 2048]
        .iter()
        .map(|&m| {
            let g = pt_grid(params.alpha, m).unwrap();
            let op = build_pt_operator(PtPotential::from(&pt), params.alpha, &g).unwrap();
            eigen_on_grid(&op, &g, 1).unwrap().eigenvalues[0]
        })
        .collect();
    let order = convergence_order(pt_raw[0], pt_raw[1], pt_raw[2]);
    assert!((order - 2.0).abs() <= 0.2, "PT order {order}");

    for j in [0, 1, 3] {
        let radial_raw: Vec<f64> = [256, 512, 1024]
            .iter()
            .map(|&m| {
                let g = radial_grid(1.0, m).unwrap();
                let op = build_radial_operator_no_gup(1.0, j, &g).unwrap();
                eigen_on_grid(&op, &g, 1).unwrap().eigenvalues[0]
            })
            .collect();
        let order = convergence_order(radial_raw[0], radial_raw[1], radial_raw[2]);
        assert!((order - 2.0).abs() <= 0.2, "radial j={j} order {order}");
    }
}

#[test]
fn sturm_counts_are_stable_under_refinement() {
    // Bounds halfway between exact levels: every grid must see the same count.
    let pt = PtPotential::from_zetas(1.5, 3.0);
    let exact: Vec<f64> = (0..4).map(|n| pt.exact_eigenvalue(n)).collect();
    for k in 0..3 {
        let bound = 0.5 * (exact[k] + exact[k + 1]);
        for m in [128, 256, 512, 1024, 2048] {
            let g = pt_grid(1.0, m).unwrap();
            let op = build_pt_operator(pt, 1.0, &g).unwrap();
            assert_eq!(op.sturm_count(bound), k + 1, "m={m} bound={bound}");
        }
    }
}

#[test]
fn pt_ground_state_error_estimate() {
    let params = ModelParams::from_dimensionless(0.2, 0.3).unwrap();
    let pt = pt_parameters(0.3, 1, Variant::Eq60, false).unwrap();
    let grid = pt_grid(params.alpha, DEFAULT_PT_POINTS).unwrap();
    let res = pt_oracle(PtPotential::from(&pt), params.alpha, &grid, 1).unwrap();
    assert!(res.error_estimate[0] / res.extrapolated[0] < 1e-7);
}

#[test]
fn gup_point_matches_chain() {
    let params = ModelParams::from_dimensionless(0.2, 0.25).unwrap();
    let oracle = oracle_energies(&params, 2, 1, Mode::Gup).unwrap();
    let chain = gup_energy_chain(0.2, 0.25, QuantumNumbers { n: 1, j: 2 }, Variant::Eq60, false).unwrap();
    assert!(rel(oracle[1].0, chain.plus) < 1e-6);
}

#[test]
fn zero_angular_momentum_extrapolation_matches_chain() {
    let params = ModelParams::from_dimensionless(0.2, 0.3).unwrap();
    let (g_sin, _) = barrier_strengths(0.3, 0);
    assert!(g_sin < 0.0);
    let oracle = oracle_energies(&params, 0, 2, Mode::Gup).unwrap();
    for (n, (e, _)) in oracle.iter().enumerate() {
        let chain = gup_energy_chain(0.2, 0.3, QuantumNumbers { n: n as u32, j: 0 }, Variant::Eq60, true).unwrap();
        assert!(rel(*e, chain.plus) < 1e-5, "n={n}: {e} vs {}", chain.plus);
    }
}

#[test]
fn radial_kappa_lattice() {
    let grid = radial_grid(1.0, DEFAULT_RADIAL_POINTS).unwrap();
    let j0 = radial_oracle(1.0, 0, &grid, 3).unwrap();
    for (k, exact) in [2.0, 6.0, 10.0].iter().enumerate() {
        assert!(rel(j0.extrapolated[k], *exact) < 1e-8);
    }
    let j2 = radial_oracle(1.0, 2, &grid, 2).unwrap();
    for (k, exact) in [6.0, 10.0].iter().enumerate() {
        assert!(rel(j2.extrapolated[k], *exact) < 1e-8);
    }
}

#[test]
fn radial_oracle_meets_the_vanishing_deformation_limit() {
    let params = make_params(1.0, 1.0, 1.0, 1.0, 0.0).unwrap();
    let grid = radial_grid(1.0, DEFAULT_RADIAL_POINTS).unwrap();
    for j in 1..=3 {
        let res = radial_oracle(1.0, j, &grid, 3).unwrap();
        for n in 0..3u32 {
            let e = energy_from_kappa_sq(&params, res.extrapolated[n as usize]).unwrap().plus;
            let limit = gup_energy_chain(params.r, 1e-9, QuantumNumbers { n, j }, Variant::Eq60, false)
                .unwrap()
                .plus;
            assert!(rel(e, limit) < 1e-5);
        }
    }
}
