use num_complex::Complex64;
use planar::coeff::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, rational()), 0..4).prop_map(|t| LaurentPoly::from_terms("A", &t))
}

fn cyc(m: u32) -> impl Strategy<Value = CyclotomicInt> {
    prop::collection::vec(-3i64..=3, m as usize).prop_map(move |v| CyclotomicInt::from_i64(&v, m))
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(a, b)| Complex64::new(a, b))
}

fn ring_axioms<C: Coeff>(a: &C, b: &C, c: &C, eq: impl Fn(&C, &C) -> bool) -> bool {
    eq(&a.mul(b).mul(c), &a.mul(&b.mul(c)))
        && eq(&a.add(b).add(c), &a.add(&b.add(c)))
        && eq(&a.mul(&b.add(c)), &a.mul(b).add(&a.mul(c)))
        && eq(&a.add(b).mul(c), &a.mul(c).add(&b.mul(c)))
        && eq(&a.mul(b), &b.mul(a))
        && eq(&a.add(b), &b.add(a))
        && eq(&a.add(&a.zero_like()), a)
        && eq(&a.mul(&a.one_like()), a)
        && a.sub(a).is_zero()
}

fn scalar_round_trip<C: Coeff>(x: &C) -> bool {
    let s = Scalar::from_json(&x.to_scalar().to_json()).unwrap();
    C::from_scalar(&s).as_ref() == Some(x)
}

proptest! {
    #[test]
    fn rational_ring(a in rational(), b in rational(), c in rational()) {
        prop_assert!(ring_axioms(&a, &b, &c, |x, y| x == y));
        prop_assert!(scalar_round_trip(&a));
        if !Coeff::is_zero(&b) {
            prop_assert_eq!(Field::div(&a, &b).unwrap().mul(&b), a.clone());
        }
    }

    #[test]
    fn laurent_ring(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert!(ring_axioms(&a, &b, &c, |x, y| x == y));
        prop_assert!(scalar_round_trip(&a));
        if !Coeff::is_zero(&b) {
            prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a.clone());
        }
        let z = Complex64::from_polar(1.0, 0.7);
        let lhs = a.mul(&b).eval_complex(z);
        prop_assert!((lhs - a.eval_complex(z) * b.eval_complex(z)).norm() < 1e-6 * (1.0 + lhs.norm()));
    }

    #[test]
    fn cyclotomic_ring((a, b, c) in (1u32..=12).prop_flat_map(|m| (cyc(m), cyc(m), cyc(m)))) {
        prop_assert!(ring_axioms(&a, &b, &c, |x, y| x == y));
        prop_assert!(scalar_round_trip(&a));
        let lhs = a.mul(&b).to_complex_value();
        prop_assert!((lhs - a.to_complex_value() * b.to_complex_value()).norm() < 1e-6);
    }

    #[test]
    fn complex_ring(a in complex(), b in complex(), c in complex()) {
        prop_assert!(ring_axioms(&a, &b, &c, |x, y| (x - y).norm() < 1e-9));
        prop_assert!(scalar_round_trip(&a));
    }

    #[test]
    fn chebyshev_recursion_identity(x in rational()) {
        for n in 2..=30 {
            let lhs = chebyshev_t(n + 1, &x).add(&x.mul(&chebyshev_t(n - 1, &x))).sub(&chebyshev_t(n, &x));
            prop_assert!(lhs.is_zero(), "n = {}", n);
        }
    }
}

#[test]
fn laurent_division_with_remainder_fails() {
    let a = LaurentPoly::from_terms("A", &[(2, rat(1, 1)), (0, rat(1, 1))]);
    let b = LaurentPoly::from_terms("A", &[(1, rat(1, 1)), (0, rat(1, 1))]);
    assert!(a.div_exact(&b).is_err());
    let a2 = LaurentPoly::from_terms("A", &[(2, rat(1, 1)), (-2, rat(1, 1))]);
    assert_eq!(a2.eval_rational(&rat(1, 1)).unwrap(), rat(2, 1));
    let zero = LaurentPoly::var("A").sub(&LaurentPoly::var("A"));
    assert!(zero.mul(&a2).is_zero());
}

#[test]
fn kauffman_loop_at_tenth_root() {
    let d = LaurentPoly::from_terms("A", &[(2, rat(-1, 1)), (-2, rat(-1, 1))]);
    let v = d.eval_complex(Complex64::from_polar(1.0, PI / 5.0));
    let expected = -2.0 * (2.0 * PI / 5.0).cos();
    assert!((v - Complex64::new(expected, 0.0)).norm() < 1e-12);
}

#[test]
fn chebyshev_examples() {
    let x = rat(1, 4);
    assert_eq!(chebyshev_t(1, &x), rat(1, 1));
    assert_eq!(chebyshev_t(2, &x), rat(1, 1));
    assert_eq!(chebyshev_t(3, &x), rat(1, 1) - &x);
    // Unrolled by hand: 3/4, 1/2, 1/2 - 3/16.
    assert_eq!(chebyshev_t(5, &x), rat(5, 16));
}

#[test]
fn chebyshev_matches_quantum_integers() {
    // With delta = 2cos(t), T_n(1/delta^2) = sin(nt) / (sin(t) delta^(n-1)).
    for t in [0.3f64, 0.9, PI / 7.0, 1.2] {
        let d = 2.0 * t.cos();
        let x = Complex64::new(1.0 / (d * d), 0.0);
        for n in 1..=30 {
            let want = (n as f64 * t).sin() / (t.sin() * d.powi(n as i32 - 1));
            let got = chebyshev_t(n, &x);
            assert!((got.re - want).abs() < 1e-8 * (1.0 + want.abs()), "t = {t}, n = {n}");
        }
    }
}

#[test]
fn cyclotomic_examples() {
    assert!(CyclotomicInt::from_i64(&[1, 1], 2).is_zero());
    assert!(CyclotomicInt::from_i64(&[1, 1, 1], 3).is_zero());
    let v = CyclotomicInt::from_i64(&[2, 0, 0, 1], 4);
    assert!(!v.is_zero());
    // zeta_4^3 = -i
    assert!((v.to_complex_value() - Complex64::new(2.0, -1.0)).norm() < 1e-12);
    assert_eq!(v, CyclotomicInt::from_i64(&[2, 0, 0, 1, 0, 0, 0, 0], 4));
}

fn smallest_prime_factor(m: u32) -> u32 {
    (2..=m).find(|p| m % p == 0).unwrap()
}

#[test]
fn cyclotomic_zero_test_agrees_with_float() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut zeros = 0;
    for trial in 0..1000 {
        let m: u32 = rng.gen_range(1..=24);
        let mut raw: Vec<i64> = (0..m).map(|_| if rng.gen_bool(0.3) { rng.gen_range(-2..=2) } else { 0 }).collect();
        if trial % 2 == 0 {
            // Cancel to zero with a vanishing sum over a coset of p-th roots of unity.
            raw.iter_mut().for_each(|x| *x = 0);
            for _ in 0..rng.gen_range(1..=3) {
                if m == 1 {
                    break;
                }
                let p = smallest_prime_factor(m);
                let (shift, c) = (rng.gen_range(0..m), rng.gen_range(-3..=3));
                for j in 0..p {
                    raw[((shift + j * m / p) % m) as usize] += c;
                }
            }
            if rng.gen_bool(0.3) {
                let i = rng.gen_range(0..m as usize);
                raw[i] += 1;
            }
        }
        let value: Complex64 =
            raw.iter().enumerate().map(|(j, &c)| Complex64::from_polar(c as f64, 2.0 * PI * j as f64 / m as f64)).sum();
        let z = CyclotomicInt::from_i64(&raw, m);
        assert_eq!(z.is_zero(), value.norm() < 1e-9, "m = {m}, raw = {raw:?}");
        zeros += z.is_zero() as usize;
    }
    assert!(zeros > 100, "too few zero cases exercised: {zeros}");
}

#[test]
fn scalar_tags_do_not_mix() {
    assert!(Rational::from_scalar(&Scalar::Complex(Complex64::new(1.0, 0.0))).is_none());
    assert!(Complex64::from_scalar(&Scalar::Rat(rat(1, 2))).is_none());
    assert!(Scalar::Rat(rat(1, 2)).try_add(&Scalar::Complex(Complex64::new(1.0, 0.0))).is_err());
    assert_eq!(chebyshev_t_scalar(3, &Scalar::Rat(rat(1, 4))).unwrap(), Scalar::Rat(rat(3, 4)));
}
