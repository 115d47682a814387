//! Scalars: exact rationals, Laurent polynomials, cyclotomic integers and
//! binary64 complex numbers.

mod cyclo;
mod laurent;
mod rational;
mod scalar;

pub use cyclo::{cyclotomic_poly, cyclotomic_reduce, euler_phi, CyclotomicInt};
pub use laurent::LaurentPoly;
pub use rational::{rat, rat_from_json, rat_to_json, Rational};
pub use scalar::Scalar;

use num_complex::Complex64;
use std::fmt::Debug;

/// Absolute tolerance used for float zero tests unless the caller overrides it.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Ring operations shared by all coefficient types.
///
/// Zero and one are produced from an existing value because cyclotomic
/// integers and Laurent polynomials carry context (order, variable name).
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Zero test with a tolerance; exact types ignore `tol`.
    fn near_zero(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn to_complex(&self) -> Option<Complex64>;

    fn to_scalar(&self) -> Scalar;
    fn from_scalar(s: &Scalar) -> Option<Self>;

    fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Coefficient types with division.
pub trait Field: Coeff {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
}

impl Coeff for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one_like(&self) -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn from_int_like(&self, n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
    fn near_zero(&self, tol: f64) -> bool {
        self.norm() < tol
    }
    fn to_complex(&self) -> Option<Complex64> {
        Some(*self)
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::Complex(*self)
    }
    fn from_scalar(s: &Scalar) -> Option<Self> {
        match s {
            Scalar::Complex(z) => Some(*z),
            _ => None,
        }
    }
}

impl Field for Complex64 {
    fn inv(&self) -> Option<Self> {
        if Coeff::is_zero(self) {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

/// `T_n(x)` with `T_1 = T_2 = 1` and `T_{n+1} = T_n - x T_{n-1}`.
pub fn chebyshev_t<C: Coeff>(n: usize, x: &C) -> C {
    assert!(n >= 1, "chebyshev_t needs n >= 1");
    let one = x.one_like();
    if n <= 2 {
        return one;
    }
    let (mut prev, mut cur) = (one.clone(), one);
    for _ in 2..n {
        let next = cur.sub(&x.mul(&prev));
        prev = cur;
        cur = next;
    }
    cur
}

/// Chebyshev recursion on tagged scalars.
pub fn chebyshev_t_scalar(n: usize, x: &Scalar) -> crate::Result<Scalar> {
    if n == 0 {
        return Err(crate::Error::Invalid("chebyshev_T needs n >= 1".into()));
    }
    Ok(match x {
        Scalar::Rat(r) => Scalar::Rat(chebyshev_t(n, r)),
        Scalar::Laurent(p) => Scalar::Laurent(chebyshev_t(n, p)),
        Scalar::Cyc(c) => Scalar::Cyc(chebyshev_t(n, c)),
        Scalar::Complex(z) => Scalar::Complex(chebyshev_t(n, z)),
    })
}
