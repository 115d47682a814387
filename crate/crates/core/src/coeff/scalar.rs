use super::rational::{rat_from_json, rat_to_json};
use super::{Coeff, CyclotomicInt, LaurentPoly, Rational};
use crate::{Error, Result};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::fmt;

/// Tagged scalar used at the I/O boundary.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rat(Rational),
    Laurent(LaurentPoly),
    Cyc(CyclotomicInt),
    Complex(Complex64),
}

impl Scalar {
    pub fn tag(&self) -> &'static str {
        match self {
            Scalar::Rat(_) => "rat",
            Scalar::Laurent(_) => "laurent",
            Scalar::Cyc(_) => "cyc",
            Scalar::Complex(_) => "c",
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Complex(_))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Laurent(p) => p.is_zero(),
            Scalar::Cyc(c) => c.is_zero(),
            Scalar::Complex(z) => z.is_zero(),
        }
    }

    /// Explicit exact-to-float promotion. Laurent polynomials only promote when constant.
    pub fn to_complex(&self) -> Result<Scalar> {
        let z = match self {
            Scalar::Rat(r) => r.to_complex(),
            Scalar::Laurent(p) => p.to_complex(),
            Scalar::Cyc(c) => c.to_complex(),
            Scalar::Complex(z) => Some(*z),
        };
        z.map(Scalar::Complex)
            .ok_or_else(|| Error::Invalid("non-constant Laurent polynomial has no float value".into()))
    }

    fn binop(
        &self,
        other: &Scalar,
        fr: impl Fn(&Rational, &Rational) -> Rational,
        fl: impl Fn(&LaurentPoly, &LaurentPoly) -> Result<LaurentPoly>,
        fc: impl Fn(&CyclotomicInt, &CyclotomicInt) -> Result<CyclotomicInt>,
        fz: impl Fn(&Complex64, &Complex64) -> Complex64,
    ) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Scalar::Laurent(fl(a, b)?),
            (Scalar::Cyc(a), Scalar::Cyc(b)) => Scalar::Cyc(fc(a, b)?),
            (Scalar::Complex(a), Scalar::Complex(b)) => Scalar::Complex(fz(a, b)),
            (a, b) => return Err(Error::MixedScalar(a.tag(), b.tag())),
        })
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, |a, b| a + b, |a, b| a.checked_add(b), |a, b| a.checked_add(b), |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.binop(other, |a, b| a * b, |a, b| a.checked_mul(b), |a, b| a.checked_mul(b), |a, b| a * b)
    }

    /// Division where defined: rationals and complex numbers, exact Laurent quotients.
    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Ok(Scalar::Rat(a / b)),
            (Scalar::Complex(a), Scalar::Complex(b)) => Ok(Scalar::Complex(a / b)),
            (Scalar::Laurent(a), Scalar::Laurent(b)) => Ok(Scalar::Laurent(a.div_exact(b)?)),
            (Scalar::Cyc(_), Scalar::Cyc(_)) => Err(Error::InexactDivision("cyclotomic division".into())),
            (a, b) => Err(Error::MixedScalar(a.tag(), b.tag())),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Laurent(p) => Scalar::Laurent(p.neg()),
            Scalar::Cyc(c) => Scalar::Cyc(c.neg()),
            Scalar::Complex(z) => Scalar::Complex(-z),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rat(r) => json!({"rat": rat_to_json(r)}),
            Scalar::Laurent(p) => json!({"laurent": p.to_json()}),
            Scalar::Cyc(c) => json!({"cyc": c.to_json()}),
            Scalar::Complex(z) => json!({"c": [z.re, z.im]}),
        }
    }

    pub fn from_json(v: &Value) -> Result<Scalar> {
        let obj = v.as_object().ok_or_else(|| Error::Parse(format!("scalar must be an object: {v}")))?;
        if obj.len() != 1 {
            return Err(Error::Parse(format!("scalar must have exactly one tag: {v}")));
        }
        let (tag, body) = obj.iter().next().unwrap();
        match tag.as_str() {
            "rat" => Ok(Scalar::Rat(rat_from_json(body)?)),
            "laurent" => Ok(Scalar::Laurent(LaurentPoly::from_json(body)?)),
            "cyc" => Ok(Scalar::Cyc(CyclotomicInt::from_json(body)?)),
            "c" => {
                let a = body.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("c: expected [re,im]".into()))?;
                let re = a[0].as_f64().ok_or_else(|| Error::Parse("c: re".into()))?;
                let im = a[1].as_f64().ok_or_else(|| Error::Parse("c: im".into()))?;
                Ok(Scalar::Complex(Complex64::new(re, im)))
            }
            t => Err(Error::Parse(format!("unknown scalar tag {t}"))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Laurent(p) => write!(f, "{p}"),
            Scalar::Cyc(c) => write!(f, "cyc{}{:?}", c.order(), c.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            Scalar::Complex(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}
impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::Laurent(p)
    }
}
impl From<CyclotomicInt> for Scalar {
    fn from(c: CyclotomicInt) -> Self {
        Scalar::Cyc(c)
    }
}
impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Complex(z)
    }
}
