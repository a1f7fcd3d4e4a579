//! Hypergeometric polynomials against exact rational summation.

use kg_oscillator::specfun::{gauss2f1_poly, hyp2f1_partial_sum, kummer_poly, pochhammer};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Term-by-term `2F1(-n, b; c; z)` in exact arithmetic; `b = None` gives `1F1`.
fn exact_series(n: u32, b: Option<&BigRational>, c: &BigRational, z: &BigRational) -> BigRational {
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let minus_n = BigRational::from_integer(BigInt::from(-i64::from(n)));
    for k in 0..=n {
        sum += &term;
        let kq = BigRational::from_integer(BigInt::from(k));
        let up = b.map_or_else(BigRational::one, |b| b + &kq);
        let num = (&minus_n + &kq) * up * z;
        let den = (c + &kq) * (&kq + BigRational::one());
        term = term * num / den;
    }
    sum
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().expect("finite rational")
}

fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        (a - b).abs() / b.abs()
    }
}

#[test]
fn gauss_literal_from_exact_sum() {
    // 1 - 3 + 2 = 0
    let exact = exact_series(2, Some(&q(3, 1)), &q(2, 1), &q(1, 1));
    assert!(exact.is_zero());
    assert_eq!(gauss2f1_poly(2, 3.0, 2.0, 1.0).unwrap(), 0.0);
}

#[test]
fn gauss_matches_exact_rationals() {
    let bs = [q(1, 2), q(3, 1), q(7, 4), q(-5, 2)];
    let cs = [q(3, 2), q(5, 1), q(9, 4)];
    let zs = [q(-1, 1), q(1, 3), q(1, 2), q(9, 10), q(1, 1)];
    for n in 0..=12 {
        for b in &bs {
            for c in &cs {
                for z in &zs {
                    let exact = to_f64(&exact_series(n, Some(b), c, z));
                    let got = gauss2f1_poly(n, to_f64(b), to_f64(c), to_f64(z)).unwrap();
                    let scale = exact.abs().max(1.0);
                    assert!((got - exact).abs() <= 1e-12 * scale, "n={n} b={b} c={c} z={z}: {got} vs {exact}");
                }
            }
        }
    }
}

#[test]
fn kummer_matches_exact_rationals() {
    let bs = [q(1, 1), q(3, 2), q(4, 1), q(11, 1)];
    let xs = [q(1, 10), q(1, 1), q(5, 2), q(5, 1)];
    for n in 0..=12 {
        for b in &bs {
            for x in &xs {
                let exact = to_f64(&exact_series(n, None, b, x));
                let got = kummer_poly(n, to_f64(b), to_f64(x)).unwrap();
                assert!((got - exact).abs() <= 1e-12 * exact.abs().max(1.0), "n={n} b={b} x={x}");
            }
        }
    }
}

fn laguerre(n: u32, m: f64, x: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0 + m - x);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + m - x) * cur - (k + m) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn laguerre_consistency() {
    for n in 0..=10u32 {
        for m in 0..=10u32 {
            for &x in &[0.1, 1.0, 5.0] {
                // n! m! / (n+m)! = 1 / (m+1)_n * n!
                let factor = pochhammer(1.0, n) / pochhammer(f64::from(m) + 1.0, n);
                let expected = factor * laguerre(n, f64::from(m), x);
                let got = kummer_poly(n, f64::from(m) + 1.0, x).unwrap();
                assert!(rel(got, expected) <= 1e-12, "n={n} m={m} x={x}: {got} vs {expected}");
            }
        }
    }
}

proptest! {
    #[test]
    fn extra_terms_change_nothing(n in 0u32..=20, b in -8.0f64..8.0, c in 0.5f64..12.0, z in -1.0f64..1.0) {
        let poly = gauss2f1_poly(n, b, c, z).unwrap();
        let longer = hyp2f1_partial_sum(-f64::from(n), b, c, z, n + 4);
        prop_assert_eq!(poly.to_bits(), gauss2f1_poly(n, b, c, z).unwrap().to_bits());
        prop_assert!((poly - longer).abs() <= 1e-12 * poly.abs().max(1.0));
        prop_assert_eq!(hyp2f1_partial_sum(-f64::from(n), b, c, z, n + 1), hyp2f1_partial_sum(-f64::from(n), b, c, z, n + 4));
    }

    #[test]
    fn argument_symmetry(n in 0u32..=10, b in 0.1f64..10.0, c in 0.5f64..10.0, z in -1.0f64..1.0) {
        let poly = gauss2f1_poly(n, b, c, z).unwrap();
        let swapped = hyp2f1_partial_sum(b, -f64::from(n), c, z, n + 3);
        prop_assert!((poly - swapped).abs() <= 1e-13 * poly.abs().max(1.0), "{} vs {}", poly, swapped);
    }

    #[test]
    fn unity_at_origin(n in 0u32..=30, b in -10.0f64..10.0, c in 0.5f64..10.0) {
        prop_assert_eq!(gauss2f1_poly(n, b, c, 0.0).unwrap(), 1.0);
        prop_assert_eq!(kummer_poly(n, c, 0.0).unwrap(), 1.0);
    }
}
