use crate::coeff::{rat, Coeff, Rational};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Largest number of spin states a single evaluation may enumerate.
pub const SPIN_STATE_GUARD: u128 = 100_000_000;

/// Weight table on `{1..Q}^arity`, stored densely with spins 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinLabel<C> {
    q: usize,
    arity: usize,
    table: Vec<C>,
}

impl<C: Coeff> SpinLabel<C> {
    pub fn constant(q: usize, arity: usize, c: C) -> Self {
        SpinLabel { q, arity, table: vec![c; q.pow(arity as u32)] }
    }

    pub fn from_fn(q: usize, arity: usize, zero: &C, f: impl Fn(&[usize]) -> C) -> Self {
        let mut t = Self::constant(q, arity, zero.zero_like());
        let mut idx = vec![0; arity];
        for slot in 0..t.table.len() {
            decode(slot, q, &mut idx);
            t.table[slot] = f(&idx);
        }
        t
    }

    /// Sparse 1-based entries, all others zero.
    pub fn from_entries(q: usize, arity: usize, zero: &C, entries: &[(Vec<usize>, C)]) -> Result<Self> {
        let mut t = Self::constant(q, arity, zero.zero_like());
        for (spins, c) in entries {
            if spins.len() != arity || spins.iter().any(|&s| s == 0 || s > q) {
                return Err(Error::Invalid(format!("spin entry {spins:?} out of range for arity {arity}, Q = {q}")));
            }
            let z: Vec<usize> = spins.iter().map(|s| s - 1).collect();
            let slot = t.slot(&z);
            t.table[slot] = c.clone();
        }
        Ok(t)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn slot(&self, spins: &[usize]) -> usize {
        spins.iter().fold(0, |acc, &s| acc * self.q + s)
    }

    /// Entry at 0-based spins.
    pub fn get(&self, spins: &[usize]) -> &C {
        &self.table[self.slot(spins)]
    }

    /// Value of a closed evaluation.
    pub fn scalar(&self) -> Option<&C> {
        (self.arity == 0).then(|| &self.table[0])
    }

    pub fn values(&self) -> &[C] {
        &self.table
    }

    /// Nonzero entries with 1-based spins.
    pub fn entries(&self) -> Vec<(Vec<usize>, C)> {
        let mut idx = vec![0; self.arity];
        let mut out = Vec::new();
        for (slot, c) in self.table.iter().enumerate() {
            if !c.is_zero() {
                decode(slot, self.q, &mut idx);
                out.push((idx.iter().map(|s| s + 1).collect(), c.clone()));
            }
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SpinLabel<D> {
        SpinLabel { q: self.q, arity: self.arity, table: self.table.iter().map(f).collect() }
    }

    /// `rotated(i_0, ..., i_{r-1}) = x(i_1, ..., i_{r-1}, i_0)`.
    pub fn rotate(&self) -> Self {
        let r = self.arity;
        if r == 0 {
            return self.clone();
        }
        let mut out = self.clone();
        let mut idx = vec![0; r];
        let mut src = vec![0; r];
        for slot in 0..self.table.len() {
            decode(slot, self.q, &mut idx);
            for j in 0..r {
                src[j] = idx[(j + r - 1) % r];
            }
            out.table[slot] = self.get(&src).clone();
        }
        out
    }
}

pub(crate) fn decode(mut slot: usize, q: usize, out: &mut [usize]) {
    for s in out.iter_mut().rev() {
        *s = slot % q;
        slot /= q;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shade {
    Black,
    White,
}

/// Shading data after smoothing every box: the interior shade of each closed
/// circle and the shade of the region cut off by each boundary semicircle.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SmoothingHints {
    #[serde(default)]
    pub circles: Vec<Shade>,
    #[serde(default)]
    pub semicircles: Vec<Shade>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetBox {
    pub label: String,
    /// Incident black regions, clockwise from the marked corner.
    pub regions: Vec<usize>,
}

/// Shaded planar network given by black-region incidences.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ShadedNetwork {
    pub black_regions: usize,
    #[serde(default)]
    pub boxes: Vec<NetBox>,
    #[serde(default)]
    pub boundary: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smoothing: Option<SmoothingHints>,
}

impl ShadedNetwork {
    pub fn validate(&self) -> Result<()> {
        for b in &self.boxes {
            if let Some(r) = b.regions.iter().find(|&&r| r >= self.black_regions) {
                return Err(Error::Invalid(format!("box {} references region {r} of {}", b.label, self.black_regions)));
            }
        }
        if let Some(r) = self.boundary.iter().find(|&&r| r >= self.black_regions) {
            return Err(Error::Invalid(format!("boundary references region {r} of {}", self.black_regions)));
        }
        Ok(())
    }

    /// Disjoint union: regions and boxes of `other` are renumbered after ours.
    pub fn disjoint_union(&self, other: &ShadedNetwork) -> ShadedNetwork {
        let off = self.black_regions;
        let mut boxes = self.boxes.clone();
        boxes.extend(other.boxes.iter().map(|b| NetBox { label: b.label.clone(), regions: b.regions.iter().map(|r| r + off).collect() }));
        let mut boundary = self.boundary.clone();
        boundary.extend(other.boundary.iter().map(|r| r + off));
        let smoothing = match (&self.smoothing, &other.smoothing) {
            (Some(a), Some(b)) => Some(SmoothingHints {
                circles: a.circles.iter().chain(&b.circles).copied().collect(),
                semicircles: a.semicircles.iter().chain(&b.semicircles).copied().collect(),
            }),
            _ => None,
        };
        ShadedNetwork { black_regions: off + other.black_regions, boxes, boundary, smoothing }
    }
}

/// Partition function `sum over spins of prod of box weights`, with boundary
/// spins as the output indices.
pub fn eval_spin_raw<C: Coeff>(net: &ShadedNetwork, q: usize, labels: &BTreeMap<String, SpinLabel<C>>, one: &C) -> Result<SpinLabel<C>> {
    if q < 1 {
        return Err(Error::Invalid("Q must be at least 1".into()));
    }
    net.validate()?;
    let mut tables = Vec::with_capacity(net.boxes.len());
    for b in &net.boxes {
        let l = labels.get(&b.label).ok_or_else(|| Error::Invalid(format!("unbound label {}", b.label)))?;
        if l.arity != b.regions.len() {
            return Err(Error::Mismatch(format!("label {} has arity {}, box has {} regions", b.label, l.arity, b.regions.len())));
        }
        if l.q != q {
            return Err(Error::Mismatch(format!("label {} is for Q = {}, evaluating at Q = {q}", b.label, l.q)));
        }
        tables.push(l);
    }
    let on_boundary: Vec<bool> = (0..net.black_regions).map(|r| net.boundary.contains(&r)).collect();
    let interior: Vec<usize> = (0..net.black_regions).filter(|&r| !on_boundary[r]).collect();
    let k = net.boundary.len();
    let total = (q as u128).checked_pow((k + interior.len()) as u32).unwrap_or(u128::MAX);
    if total > SPIN_STATE_GUARD {
        return Err(Error::SizeGuard(format!("{q}^{} spin states", k + interior.len())));
    }
    let mut out = SpinLabel::constant(q, k, one.zero_like());
    let mut sigma = vec![usize::MAX; net.black_regions];
    let mut bidx = vec![0; k];
    let mut iidx = vec![0; interior.len()];
    let n_inner = q.pow(interior.len() as u32);
    let mut spins = Vec::new();
    for slot in 0..out.table.len() {
        decode(slot, q, &mut bidx);
        sigma.iter_mut().for_each(|s| *s = usize::MAX);
        let mut consistent = true;
        for (&r, &s) in net.boundary.iter().zip(&bidx) {
            if sigma[r] != usize::MAX && sigma[r] != s {
                consistent = false;
                break;
            }
            sigma[r] = s;
        }
        if !consistent {
            continue;
        }
        let mut acc = one.zero_like();
        for inner in 0..n_inner {
            decode(inner, q, &mut iidx);
            for (&r, &s) in interior.iter().zip(&iidx) {
                sigma[r] = s;
            }
            let mut w = one.clone();
            for (b, t) in net.boxes.iter().zip(&tables) {
                spins.clear();
                spins.extend(b.regions.iter().map(|&r| sigma[r]));
                let v = t.get(&spins);
                if v.is_zero() {
                    w = one.zero_like();
                    break;
                }
                w = w.mul(v);
            }
            if !w.is_zero() {
                acc = acc.add(&w);
            }
        }
        out.table[slot] = acc;
    }
    Ok(out)
}

/// Exponent `(n+ - n-)/2 + (n∂+ - n∂-)/4` where white interiors count as positive.
pub fn f_exponent(net: &ShadedNetwork) -> Result<Rational> {
    let h = net.smoothing.as_ref().ok_or_else(|| Error::MissingHints("network has no smoothing data".into()))?;
    let sign = |s: &Shade| if *s == Shade::White { 1 } else { -1 };
    let c: i64 = h.circles.iter().map(sign).sum();
    let s: i64 = h.semicircles.iter().map(sign).sum();
    Ok(rat(c, 2) + rat(s, 4))
}

/// `q^e` as an exact rational when it is one.
pub fn exact_power(q: u64, e: &Rational) -> Option<Rational> {
    let (a, b) = (e.numer().clone(), e.denom().clone());
    let b = b.to_u32()?;
    let root = integer_root(q, b)?;
    let base = Rational::from_integer(BigInt::from(root));
    let mag = a.abs().to_u32()?;
    let p = num_traits::pow(base, mag as usize);
    Some(if a.is_negative() { p.recip() } else { p })
}

fn integer_root(q: u64, b: u32) -> Option<u64> {
    let guess = (q as f64).powf(1.0 / b as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|r| r.checked_pow(b) == Some(q))
}

/// Normalized partition function values: exact where `Q^f` is rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Normalized {
    Exact(SpinLabel<Rational>),
    Float(SpinLabel<Complex64>),
}

pub fn eval_spin_normalized(net: &ShadedNetwork, q: usize, labels: &BTreeMap<String, SpinLabel<Rational>>) -> Result<(Rational, Normalized)> {
    let e = f_exponent(net)?;
    let raw = eval_spin_raw(net, q, labels, &Rational::one())?;
    Ok(match exact_power(q as u64, &e) {
        Some(f) => (e, Normalized::Exact(raw.map(|c| c * &f))),
        None => {
            let f = (q as f64).powf(crate::coeff::Coeff::to_complex(&e).unwrap().re);
            (e, Normalized::Float(raw.map(|c| c.to_complex().unwrap() * f)))
        }
    })
}

/// Number of proper `q`-colorings, as the spin model with one black region
/// per vertex and weight `1 - [a = b]` on each edge.
pub fn chromatic(vertices: usize, edges: &[(usize, usize)], q: usize) -> Result<BigInt> {
    if let Some(e) = edges.iter().find(|(a, b)| *a >= vertices || *b >= vertices) {
        return Err(Error::Invalid(format!("edge {e:?} out of range")));
    }
    let net = ShadedNetwork {
        black_regions: vertices,
        boxes: edges.iter().map(|&(a, b)| NetBox { label: "edge".into(), regions: vec![a, b] }).collect(),
        boundary: vec![],
        smoothing: None,
    };
    let one = Rational::one();
    let w = SpinLabel::from_fn(q, 2, &one, |s| if s[0] == s[1] { Rational::zero() } else { Rational::one() });
    let labels = BTreeMap::from([("edge".to_string(), w)]);
    let z = eval_spin_raw(&net, q, &labels, &one)?;
    let v = z.scalar().expect("closed network").clone();
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}
