use super::{Coeff, Field};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("not an integer: {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("not an integer: {s}"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

/// `[num, den]`; integers that overflow i64 are written as decimal strings.
pub fn rat_to_json(r: &Rational) -> Value {
    json!([int_to_json(r.numer()), int_to_json(r.denom())])
}

pub fn rat_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::Array(a) if a.len() == 2 => {
            let n = int_from_json(&a[0])?;
            let d = int_from_json(&a[1])?;
            if d.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rational::new(n, d))
        }
        Value::Number(_) | Value::String(_) => Ok(Rational::from_integer(int_from_json(v)?)),
        other => Err(Error::Parse(format!("expected [num, den], got {other}"))),
    }
}

pub(crate) fn big_to_f64(n: &BigInt) -> f64 {
    n.to_f64().unwrap_or(if n.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

pub(crate) fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| big_to_f64(r.numer()) / big_to_f64(r.denom()))
}

impl Coeff for Rational {
    fn to_scalar(&self) -> super::Scalar {
        super::Scalar::Rat(self.clone())
    }
    fn from_scalar(s: &super::Scalar) -> Option<Self> {
        match s {
            super::Scalar::Rat(x) => Some(x.clone()),
            _ => None,
        }
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_int_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn to_complex(&self) -> Option<Complex64> {
        Some(Complex64::new(rat_to_f64(self), 0.0))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
