use super::rational::{big_to_f64, int_to_json};
use super::Coeff;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::f64::consts::PI;

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    assert!(m >= 1);
    // x^m - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn] / den[dn];
        q[i] = c;
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Element of Z[zeta_m], stored as its reduction modulo Phi_m.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    m: u32,
    coeffs: Vec<BigInt>,
}

/// Reduce `sum c_j zeta_m^j` to the canonical representative.
pub fn cyclotomic_reduce(raw: &[BigInt], m: u32) -> CyclotomicInt {
    assert!(m >= 1, "cyclotomic order must be positive");
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    // First fold exponents mod m, then divide by the monic Phi_m.
    let mut c = vec![BigInt::zero(); (m as usize).max(deg)];
    for (j, v) in raw.iter().enumerate() {
        c[j % m as usize] += v;
    }
    for i in (deg..c.len()).rev() {
        if c[i].is_zero() {
            continue;
        }
        let lead = std::mem::take(&mut c[i]);
        for (j, p) in phi.iter().enumerate().take(deg) {
            if *p != 0 {
                c[i - deg + j] -= &lead * p;
            }
        }
    }
    c.truncate(deg);
    CyclotomicInt { m, coeffs: c }
}

impl CyclotomicInt {
    pub fn zero(m: u32) -> Self {
        cyclotomic_reduce(&[], m)
    }

    pub fn one(m: u32) -> Self {
        Self::root(m, 0)
    }

    /// zeta_m^e
    pub fn root(m: u32, e: i64) -> Self {
        let mut raw = vec![BigInt::zero(); m as usize];
        raw[e.rem_euclid(m as i64) as usize] = BigInt::one();
        cyclotomic_reduce(&raw, m)
    }

    pub fn from_i64(raw: &[i64], m: u32) -> Self {
        let v: Vec<BigInt> = raw.iter().map(|&x| BigInt::from(x)).collect();
        cyclotomic_reduce(&v, m)
    }

    /// Sum of zeta_m^e weighted by the given counts, indexed by exponent mod m.
    pub fn from_exponent_counts(counts: &[i64], m: u32) -> Self {
        Self::from_i64(counts, m)
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_complex_value(&self) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / self.m as f64) * big_to_f64(c))
            .sum()
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.m, other.m, "cyclotomic orders differ");
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::Invalid(format!("cyclotomic orders differ: {} vs {}", self.m, other.m)));
        }
        Ok(Coeff::add(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::Invalid(format!("cyclotomic orders differ: {} vs {}", self.m, other.m)));
        }
        Ok(Coeff::mul(self, other))
    }

    pub fn to_json(&self) -> Value {
        let cs: Vec<Value> = self.coeffs.iter().map(int_to_json).collect();
        json!({"m": self.m, "coeffs": cs})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let m = v
            .get("m")
            .and_then(Value::as_u64)
            .filter(|&m| m >= 1)
            .ok_or_else(|| Error::Parse("cyc: missing or invalid m".into()))? as u32;
        let cs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("cyc: missing coeffs".into()))?;
        let mut raw = Vec::with_capacity(cs.len());
        for c in cs {
            raw.push(match c {
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| Error::Parse("cyc coeff".into()))?),
                Value::String(s) => s.parse().map_err(|_| Error::Parse("cyc coeff".into()))?,
                _ => return Err(Error::Parse("cyc coeff".into())),
            });
        }
        Ok(cyclotomic_reduce(&raw, m))
    }
}

impl Coeff for CyclotomicInt {
    fn to_scalar(&self) -> super::Scalar {
        super::Scalar::Cyc(self.clone())
    }
    fn from_scalar(s: &super::Scalar) -> Option<Self> {
        match s {
            super::Scalar::Cyc(x) => Some(x.clone()),
            _ => None,
        }
    }
    fn zero_like(&self) -> Self {
        CyclotomicInt::zero(self.m)
    }
    fn one_like(&self) -> Self {
        CyclotomicInt::one(self.m)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        self.check_order(other);
        CyclotomicInt { m: self.m, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        self.check_order(other);
        let n = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); (2 * n).saturating_sub(1).max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        cyclotomic_reduce(&raw, self.m)
    }
    fn neg(&self) -> Self {
        CyclotomicInt { m: self.m, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    /// zeta -> zeta^{-1}
    fn conj(&self) -> Self {
        let m = self.m as usize;
        let mut raw = vec![BigInt::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(m - j % m) % m] += c;
        }
        cyclotomic_reduce(&raw, self.m)
    }
    fn from_int_like(&self, n: i64) -> Self {
        CyclotomicInt::from_i64(&[n], self.m)
    }
    fn to_complex(&self) -> Option<Complex64> {
        Some(self.to_complex_value())
    }
}
