use super::diagram::{tl_basis, TLDiagram};
use crate::coeff::{Coeff, Field, Scalar};
use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Loop values: `delta1` for loops with black interior, `delta2` for white.
#[derive(Clone, Debug, PartialEq)]
pub struct TLParams<C> {
    pub delta1: C,
    pub delta2: C,
}

impl<C: Coeff> TLParams<C> {
    pub fn new(delta1: C, delta2: C) -> Result<Self> {
        if delta1.is_zero() || delta2.is_zero() {
            return Err(Error::Invalid("loop parameters must be nonzero".into()));
        }
        Ok(TLParams { delta1, delta2 })
    }

    pub fn spherical(delta: C) -> Result<Self> {
        Self::new(delta.clone(), delta)
    }

    pub fn is_spherical(&self) -> bool {
        self.delta1 == self.delta2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Formal linear combination of k-diagrams.
#[derive(Clone, Debug, PartialEq)]
pub struct TLElement<C> {
    k: usize,
    terms: BTreeMap<TLDiagram, C>,
}

/// Count loops of the closed curve system formed by two pairings of points on a line.
///
/// Returns (black, white) loop counts. A loop's interior color is the color of the
/// segment just right of its leftmost point; segments alternate starting from
/// `first_black` at the far left.
pub(crate) fn meander_loops(upper: &[usize], lower: &[usize], first_black: bool) -> (u32, u32) {
    let n = upper.len();
    let mut seen = vec![false; n];
    let (mut black, mut white) = (0, 0);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut p = s;
        let mut min = s;
        loop {
            seen[p] = true;
            let q = lower[p];
            seen[q] = true;
            min = min.min(q);
            p = upper[q];
            if p == s {
                break;
            }
            min = min.min(p);
        }
        let seg = min + 1;
        if (seg % 2 == 1) != first_black {
            black += 1;
        } else {
            white += 1;
        }
    }
    (black, white)
}

/// (black, white) loop counts of the Markov closure of a diagram.
pub fn closure_loops(d: &TLDiagram, side: Side) -> (u32, u32) {
    let k = d.k();
    let n = 2 * k;
    let rainbow: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
    match side {
        Side::Right => meander_loops(&rainbow, d.matching(), false),
        Side::Left => {
            // Cut at the right wall: bottom row right to left, then top row.
            let pos = |i: usize| if i < k { k + i } else { i - k };
            let mut lower = vec![0; n];
            for i in 0..n {
                lower[pos(i)] = pos(d.partner(i));
            }
            meander_loops(&rainbow, &lower, k % 2 == 1)
        }
    }
}

impl<C: Coeff> TLElement<C> {
    pub fn zero(k: usize) -> Self {
        TLElement { k, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: TLDiagram, c: C) -> Self {
        let mut e = Self::zero(d.k());
        e.add_term(d, c);
        e
    }

    pub fn identity(k: usize, one: C) -> Self {
        Self::from_diagram(TLDiagram::identity(k), one)
    }

    pub fn from_terms(k: usize, terms: Vec<(TLDiagram, C)>) -> Result<Self> {
        let mut e = Self::zero(k);
        for (d, c) in terms {
            if d.k() != k {
                return Err(Error::Mismatch(format!("diagram with k = {} in element with k = {k}", d.k())));
            }
            e.add_term(d, c);
        }
        Ok(e)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &TLDiagram) -> Option<&C> {
        self.terms.get(d)
    }

    pub fn add_term(&mut self, d: TLDiagram, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_k(other)?;
        let mut r = self.clone();
        for (d, c) in &other.terms {
            r.add_term(d.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> Self {
        TLElement { k: self.k, terms: self.terms.iter().map(|(d, c)| (d.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut r = Self::zero(self.k);
        for (d, c) in &self.terms {
            r.add_term(d.clone(), c.mul(s));
        }
        r
    }

    fn check_k(&self, other: &Self) -> Result<()> {
        if self.k != other.k {
            return Err(Error::Mismatch(format!("k = {} vs {}", self.k, other.k)));
        }
        Ok(())
    }

    /// Stack `self` above `other`; closed middle loops become loop factors.
    pub fn mul(&self, other: &Self, p: &TLParams<C>) -> Result<Self> {
        self.check_k(other)?;
        let mut r = Self::zero(self.k);
        let mut cache: BTreeMap<(u32, u32), C> = BTreeMap::new();
        for (dx, cx) in &self.terms {
            for (dy, cy) in &other.terms {
                let (d, b, w) = multiply_diagrams(dx, dy)?;
                let f = cache
                    .entry((b, w))
                    .or_insert_with(|| p.delta1.pow(b).mul(&p.delta2.pow(w)))
                    .clone();
                r.add_term(d, cx.mul(cy).mul(&f));
            }
        }
        Ok(r)
    }

    /// Antilinear reflection in the horizontal midline.
    pub fn star(&self) -> Self {
        let mut r = Self::zero(self.k);
        for (d, c) in &self.terms {
            r.add_term(d.star(), c.conj());
        }
        r
    }

    pub fn include(&self) -> Self {
        let mut r = Self::zero(self.k + 1);
        for (d, c) in &self.terms {
            r.add_term(d.include(), c.clone());
        }
        r
    }

    pub fn rotate(&self) -> Self {
        self.map_diagrams(|d| d.rotate())
    }

    /// Shift all boundary labels by `s` points (odd `s` changes the shading).
    pub fn shift(&self, s: usize) -> Self {
        self.map_diagrams(|d| d.shift(s))
    }

    fn map_diagrams(&self, f: impl Fn(&TLDiagram) -> TLDiagram) -> Self {
        let mut r = Self::zero(self.k);
        for (d, c) in &self.terms {
            r.add_term(f(d), c.clone());
        }
        r
    }

    /// Unnormalized trace: weighted loop count of the closure on `side`.
    pub fn trace(&self, p: &TLParams<C>, side: Side) -> C {
        let mut acc: Option<C> = None;
        for (d, c) in &self.terms {
            let (b, w) = closure_loops(d, side);
            let t = c.mul(&p.delta1.pow(b)).mul(&p.delta2.pow(w));
            acc = Some(match acc {
                Some(a) => a.add(&t),
                None => t,
            });
        }
        acc.unwrap_or_else(|| p.delta1.zero_like())
    }

    /// Every coefficient within `tol` of the other's (absent terms count as zero).
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.k != other.k {
            return false;
        }
        let keys: std::collections::BTreeSet<&TLDiagram> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().all(|d| match (self.terms.get(d), other.terms.get(d)) {
            (Some(a), Some(b)) => a.sub(b).near_zero(tol),
            (Some(a), None) | (None, Some(a)) => a.near_zero(tol),
            (None, None) => true,
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|(d, c)| json!([d.to_json(), c.to_scalar().to_json()])).collect())
    }

    pub fn from_json(v: &Value, k: Option<usize>) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("element: expected a list of [diagram, scalar]".into()))?;
        let mut terms = Vec::new();
        for t in arr {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse("element term".into()))?;
            let d = TLDiagram::from_json(&pair[0])?;
            let s = Scalar::from_json(&pair[1])?;
            let c = C::from_scalar(&s).ok_or_else(|| Error::Parse(format!("unexpected scalar tag {}", s.tag())))?;
            terms.push((d, c));
        }
        let k = match (k, terms.first()) {
            (Some(k), _) => k,
            (None, Some((d, _))) => d.k(),
            (None, None) => return Err(Error::Parse("empty element needs explicit k".into())),
        };
        Self::from_terms(k, terms)
    }
}

impl<C: Field> TLElement<C> {
    /// `delta^{-k} Tr`; needs a spherical parameter set.
    pub fn normalized_trace(&self, p: &TLParams<C>, side: Side) -> Result<C> {
        if !p.is_spherical() {
            return Err(Error::Invalid("normalized trace requires delta1 = delta2".into()));
        }
        let dk = p.delta1.pow(self.k as u32);
        let inv = dk.inv().ok_or_else(|| Error::Invalid("delta^k is zero".into()))?;
        Ok(self.trace(p, side).mul(&inv))
    }
}

/// Product of two diagrams: resulting diagram plus (black, white) middle loop counts.
pub fn multiply_diagrams(x: &TLDiagram, y: &TLDiagram) -> Result<(TLDiagram, u32, u32)> {
    let comp = x.compose(y)?;
    let (mut b, mut w) = (0, 0);
    for (c0, _) in &comp.loops {
        // Column c0 + 1 (1-based) odd means black interior.
        if c0 % 2 == 0 {
            b += 1;
        } else {
            w += 1;
        }
    }
    Ok((comp.diagram, b, w))
}

/// E_i as an element.
pub fn e_element<C: Coeff>(k: usize, i: usize, one: &C) -> Result<TLElement<C>> {
    Ok(TLElement::from_diagram(TLDiagram::e(k, i)?, one.one_like()))
}

/// Gram matrix `G[i][j] = Tr_R(d_i^* d_j)` over the sorted basis.
pub fn gram_matrix<C: Coeff>(k: usize, p: &TLParams<C>) -> Vec<Vec<C>> {
    let basis = tl_basis(k);
    basis
        .iter()
        .map(|di| {
            let ds = di.star();
            basis
                .iter()
                .map(|dj| {
                    let (d, b, w) = multiply_diagrams(&ds, dj).expect("same k");
                    let (cb, cw) = closure_loops(&d, Side::Right);
                    p.delta1.pow(b + cb).mul(&p.delta2.pow(w + cw))
                })
                .collect()
        })
        .collect()
}

/// Rank of the Gram form at a real loop value, by pivoted elimination.
pub fn gram_rank(k: usize, delta: f64, rel_tol: f64) -> usize {
    let basis = tl_basis(k);
    let m: Vec<Vec<f64>> = basis
        .iter()
        .map(|di| {
            let ds = di.star();
            basis
                .iter()
                .map(|dj| {
                    let (d, b, w) = multiply_diagrams(&ds, dj).expect("same k");
                    let (cb, cw) = closure_loops(&d, Side::Right);
                    delta.powi((b + cb + w + cw) as i32)
                })
                .collect()
        })
        .collect();
    crate::linalg::rank_f64(&m, rel_tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{rat, Rational};

    fn params(d1: Rational, d2: Rational) -> TLParams<Rational> {
        TLParams::new(d1, d2).unwrap()
    }

    #[test]
    fn e_squared_two_parameter() {
        let p = params(rat(3, 1), rat(5, 1));
        for k in 2..=6 {
            for i in 1..k {
                let e = e_element(k, i, &rat(1, 1)).unwrap();
                let expect = if i % 2 == 1 { rat(3, 1) } else { rat(5, 1) };
                assert_eq!(e.mul(&e, &p).unwrap(), e.scale(&expect), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn e_braid_and_commute() {
        let p = params(rat(2, 1), rat(7, 3));
        let one = rat(1, 1);
        let e1 = e_element(3, 1, &one).unwrap();
        let e2 = e_element(3, 2, &one).unwrap();
        assert_eq!(e1.mul(&e2, &p).unwrap().mul(&e1, &p).unwrap(), e1);
        let f1 = e_element(4, 1, &one).unwrap();
        let f3 = e_element(4, 3, &one).unwrap();
        assert_eq!(f1.mul(&f3, &p).unwrap(), f3.mul(&f1, &p).unwrap());
    }

    #[test]
    fn right_trace_of_identity() {
        let p = params(rat(2, 1), rat(3, 1));
        for k in 0..7 {
            let id = TLElement::identity(k, rat(1, 1));
            let b = k.div_ceil(2) as u32;
            let w = (k / 2) as u32;
            assert_eq!(id.trace(&p, Side::Right), Coeff::pow(&rat(2, 1), b).mul(&Coeff::pow(&rat(3, 1), w)), "k={k}");
        }
    }

    #[test]
    fn normalized_trace_of_e() {
        let d = rat(5, 2);
        let p = TLParams::spherical(d.clone()).unwrap();
        for k in 2..6 {
            for i in 1..k {
                let e = e_element(k, i, &rat(1, 1)).unwrap().scale(&d.inv().unwrap());
                for side in [Side::Left, Side::Right] {
                    assert_eq!(e.normalized_trace(&p, side).unwrap(), rat(4, 25));
                }
            }
            let id = TLElement::identity(k, rat(1, 1));
            assert_eq!(id.normalized_trace(&p, Side::Left).unwrap(), rat(1, 1));
        }
    }

    #[test]
    fn small_gram() {
        let p = TLParams::spherical(rat(3, 1)).unwrap();
        assert_eq!(gram_matrix(1, &p), vec![vec![rat(3, 1)]]);
        let g = gram_matrix(2, &p);
        // basis sorted: identity [3,2,1,0] sorts after E_1 [1,0,3,2]
        assert_eq!(g, vec![vec![rat(9, 1), rat(3, 1)], vec![rat(3, 1), rat(9, 1)]]);
        assert_eq!(gram_rank(2, 1.0, 1e-6), 1);
        assert_eq!(gram_rank(1, 0.5, 1e-6), 1);
    }

    #[test]
    fn element_json_roundtrip() {
        let e = e_element(3, 2, &rat(1, 1)).unwrap().add(&TLElement::identity(3, rat(-1, 3))).unwrap();
        let back: TLElement<Rational> = TLElement::from_json(&e.to_json(), None).unwrap();
        assert_eq!(back, e);
    }
}
