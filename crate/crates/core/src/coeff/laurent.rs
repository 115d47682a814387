use super::rational::{rat_from_json, rat_to_f64, rat_to_json};
use super::{Coeff, Rational, Scalar};
use crate::{Error, Result};
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Finite sum of `c_e * var^e` with rational coefficients and integer exponents.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    var: String,
    terms: BTreeMap<i64, Rational>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.var == other.var || self.is_constant())
    }
}
impl Eq for LaurentPoly {}

impl LaurentPoly {
    pub fn zero(var: &str) -> Self {
        LaurentPoly { var: var.to_string(), terms: BTreeMap::new() }
    }

    pub fn constant(var: &str, c: Rational) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: &str, exp: i64, c: Rational) -> Self {
        let mut p = Self::zero(var);
        if !Zero::is_zero(&c) {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn var(var: &str) -> Self {
        Self::monomial(var, 1, Rational::one())
    }

    pub fn from_terms(var: &str, terms: &[(i64, Rational)]) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(*e, c);
        }
        p
    }

    fn add_term(&mut self, e: i64, c: &Rational) {
        if Zero::is_zero(c) {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if Zero::is_zero(entry) {
            self.terms.remove(&e);
        }
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    fn pick_var<'a>(&'a self, other: &'a Self) -> &'a str {
        if self.is_constant() {
            &other.var
        } else {
            &self.var
        }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var && !self.is_constant() && !other.is_constant() {
            return Err(Error::Invalid(format!("variables differ: {} vs {}", self.var, other.var)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(Coeff::add(self, other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        Ok(Coeff::mul(self, other))
    }

    /// Exact quotient; errors if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let var = self.pick_var(other).to_string();
        let (dmin, dmax) = match (other.min_exp(), other.max_exp()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::InexactDivision("division by zero polynomial".into())),
        };
        let lead = other.terms[&dmax].clone();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(&var);
        // Long division from the top; anything left below dmin-degree window is a remainder.
        while let Some(top) = rem.max_exp() {
            let low = rem.min_exp().unwrap();
            if top - dmax < low - dmin {
                break;
            }
            let c = &rem.terms[&top] / &lead;
            let shift = top - dmax;
            quot.add_term(shift, &c);
            for (e, dc) in other.terms.iter() {
                rem.add_term(e + shift, &(-(dc * &c)));
            }
        }
        if !rem.terms.is_empty() {
            return Err(Error::InexactDivision(format!("{self} / {other}")));
        }
        Ok(quot)
    }

    /// `p(A^{-1})`.
    pub fn bar(&self) -> Self {
        let mut p = Self::zero(&self.var);
        for (e, c) in &self.terms {
            p.terms.insert(-e, c.clone());
        }
        p
    }

    pub fn eval_rational(&self, x: &Rational) -> Result<Rational> {
        if Zero::is_zero(x) && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::InexactDivision("negative power of zero".into()));
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 { x.pow(*e as i32) } else { x.recip().pow((-e) as i32) };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| x.powi(*e as i32) * rat_to_f64(c))
            .sum()
    }

    /// Evaluate at a rational or complex point.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar> {
        match x {
            Scalar::Rat(r) => Ok(Scalar::Rat(self.eval_rational(r)?)),
            Scalar::Complex(z) => Ok(Scalar::Complex(self.eval_complex(*z))),
            Scalar::Cyc(c) => Ok(Scalar::Complex(self.eval_complex(c.to_complex_value()))),
            Scalar::Laurent(_) => Err(Error::Invalid("cannot evaluate at a Laurent polynomial".into())),
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().map(|(e, c)| json!([e, rat_to_json(c)])).collect();
        json!({"var": self.var, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let var = v
            .get("var")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("laurent: missing var".into()))?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("laurent: missing terms".into()))?;
        let mut p = LaurentPoly::zero(var);
        for t in terms {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("laurent term".into()))?;
            let e = pair[0].as_i64().ok_or_else(|| Error::Parse("laurent exponent".into()))?;
            p.add_term(e, &rat_from_json(&pair[1])?);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*{}", self.var)?,
                _ => write!(f, "{c}*{}^{e}", self.var)?,
            }
        }
        Ok(())
    }
}

impl Coeff for LaurentPoly {
    fn to_scalar(&self) -> super::Scalar {
        super::Scalar::Laurent(self.clone())
    }
    fn from_scalar(s: &super::Scalar) -> Option<Self> {
        match s {
            super::Scalar::Laurent(x) => Some(x.clone()),
            _ => None,
        }
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(&self.var)
    }
    fn one_like(&self) -> Self {
        LaurentPoly::constant(&self.var, Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.var = self.pick_var(other).to_string();
        for (e, c) in &other.terms {
            p.add_term(*e, c);
        }
        p
    }
    fn mul(&self, other: &Self) -> Self {
        let mut p = LaurentPoly::zero(self.pick_var(other));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                p.add_term(e1 + e2, &(c1 * c2));
            }
        }
        p
    }
    fn neg(&self) -> Self {
        LaurentPoly { var: self.var.clone(), terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
    /// Coefficients are real, so conjugation is the identity on the formal polynomial.
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_int_like(&self, n: i64) -> Self {
        LaurentPoly::constant(&self.var, Rational::from_integer(n.into()))
    }
    fn to_complex(&self) -> Option<Complex64> {
        if self.is_constant() {
            Some(Complex64::new(rat_to_f64(&self.coeff(0)), 0.0))
        } else {
            None
        }
    }
}
