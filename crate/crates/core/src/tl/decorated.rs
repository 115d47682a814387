//! Temperley-Lieb diagrams whose strings carry labels from a finite
//! dimensional algebra with a trace.
//!
//! Strings are oriented with black on their left: top points in odd columns
//! and bottom points in even columns are string starts. Labels met along a
//! composed string multiply in the order of travel; a closed loop with
//! accumulated label `a` is removed with factor `TR(a)`.

use super::diagram::{tl_basis, Composition, Layer, Piece, TLDiagram};
use super::element::Side;
use super::jw::jones_wenzl;
use crate::coeff::{Coeff, Field};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Algebra data: `structure[i][j][l]` is the coefficient of `a_l` in `a_i a_j`.
#[derive(Clone, Debug)]
pub struct DecoratedAlgebraSpec<C> {
    pub structure: Vec<Vec<Vec<C>>>,
    pub unit: usize,
    /// Loop values `TR(a_l)`; `TR(1)` is the plain loop value.
    pub trace: Vec<C>,
}

impl<C: Coeff> DecoratedAlgebraSpec<C> {
    pub fn new(structure: Vec<Vec<Vec<C>>>, unit: usize, trace: Vec<C>) -> Result<Self> {
        let d = structure.len();
        if d == 0 || unit >= d || trace.len() != d {
            return Err(Error::Invalid("decorated spec: bad dimension, unit or trace length".into()));
        }
        if structure.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::Invalid("decorated spec: structure constants must be d x d x d".into()));
        }
        let s = DecoratedAlgebraSpec { structure, unit, trace };
        for i in 0..d {
            let ei = s.basis_vec(i);
            if s.mul_vec(&ei, unit) != ei || s.left_mul(unit, &ei) != ei {
                return Err(Error::Invalid(format!("decorated spec: unit is not an identity for a_{i}")));
            }
        }
        Ok(s)
    }

    /// The one-dimensional algebra with loop value `delta`.
    pub fn scalar(delta: C) -> Self {
        let one = delta.one_like();
        DecoratedAlgebraSpec { structure: vec![vec![vec![one]]], unit: 0, trace: vec![delta] }
    }

    pub fn dim(&self) -> usize {
        self.structure.len()
    }

    fn zero(&self) -> C {
        self.trace[0].zero_like()
    }

    pub fn basis_vec(&self, i: usize) -> Vec<C> {
        let mut v = vec![self.zero(); self.dim()];
        v[i] = self.zero().one_like();
        v
    }

    /// `v * a_j`
    pub fn mul_vec(&self, v: &[C], j: usize) -> Vec<C> {
        let d = self.dim();
        let mut out = vec![self.zero(); d];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (l, o) in out.iter_mut().enumerate() {
                let c = &self.structure[i][j][l];
                if !c.is_zero() {
                    *o = o.add(&vi.mul(c));
                }
            }
        }
        out
    }

    /// `a_i * v`
    pub fn left_mul(&self, i: usize, v: &[C]) -> Vec<C> {
        let d = self.dim();
        let mut out = vec![self.zero(); d];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (l, o) in out.iter_mut().enumerate() {
                let c = &self.structure[i][j][l];
                if !c.is_zero() {
                    *o = o.add(&vj.mul(c));
                }
            }
        }
        out
    }

    /// Product of basis elements in order.
    pub fn product(&self, labels: &[usize]) -> Vec<C> {
        let mut v = self.basis_vec(self.unit);
        for &l in labels {
            v = self.mul_vec(&v, l);
        }
        v
    }

    pub fn tr(&self, v: &[C]) -> C {
        v.iter().zip(&self.trace).fold(self.zero(), |acc, (a, t)| acc.add(&a.mul(t)))
    }

    pub fn loop_value(&self) -> &C {
        &self.trace[self.unit]
    }
}

/// A diagram with one basis label per string (strings ordered by smaller endpoint).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedDiagram {
    pub diagram: TLDiagram,
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedElement<C> {
    k: usize,
    terms: BTreeMap<DecoratedDiagram, C>,
}

/// Whether point `i` of a k-diagram is where its string starts.
pub fn is_start(k: usize, i: usize) -> bool {
    if i < k {
        i % 2 == 0
    } else {
        (2 * k - i) % 2 == 0
    }
}

pub fn decorated_basis<C>(k: usize, spec: &DecoratedAlgebraSpec<C>) -> Vec<DecoratedDiagram> {
    let d = spec.structure.len();
    let mut out = Vec::new();
    for diagram in tl_basis(k) {
        let s = k;
        let total = d.pow(s as u32);
        for code in 0..total {
            let mut labels = vec![0; s];
            let mut c = code;
            for l in labels.iter_mut().rev() {
                *l = c % d;
                c /= d;
            }
            out.push(DecoratedDiagram { diagram: diagram.clone(), labels });
        }
    }
    out
}

fn reverse_pieces(pieces: &[Piece]) -> Vec<Piece> {
    pieces.iter().rev().map(|p| Piece { layer: p.layer, from: p.to, to: p.from }).collect()
}

impl<C: Coeff> DecoratedElement<C> {
    pub fn zero(k: usize) -> Self {
        DecoratedElement { k, terms: BTreeMap::new() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DecoratedDiagram, &C)> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: DecoratedDiagram, c: C) {
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

    pub fn from_basis(d: DecoratedDiagram, c: C) -> Self {
        let mut e = Self::zero(d.diagram.k());
        e.add_term(d, c);
        e
    }

    /// Expand a diagram whose strings carry arbitrary algebra elements.
    pub fn decorate(diagram: &TLDiagram, labels: &[Vec<C>], scale: &C) -> Self {
        let mut e = Self::zero(diagram.k());
        let mut acc: Vec<(Vec<usize>, C)> = vec![(vec![], scale.clone())];
        for v in labels {
            let mut next = Vec::new();
            for (ls, c) in &acc {
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        let mut l2 = ls.clone();
                        l2.push(i);
                        next.push((l2, c.mul(vi)));
                    }
                }
            }
            acc = next;
        }
        for (labels, c) in acc {
            e.add_term(DecoratedDiagram { diagram: diagram.clone(), labels }, c);
        }
        e
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::Mismatch(format!("k = {} vs {}", self.k, other.k)));
        }
        let mut r = self.clone();
        for (d, c) in &other.terms {
            r.add_term(d.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut r = Self::zero(self.k);
        for (d, c) in &self.terms {
            r.add_term(d.clone(), c.mul(s));
        }
        r
    }

    pub fn mul(&self, other: &Self, spec: &DecoratedAlgebraSpec<C>) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::Mismatch(format!("k = {} vs {}", self.k, other.k)));
        }
        let mut r = Self::zero(self.k);
        for (dx, cx) in &self.terms {
            for (dy, cy) in &other.terms {
                let prod = multiply_decorated(dx, dy, spec)?;
                let c = cx.mul(cy);
                for (d, v) in prod.terms {
                    r.add_term(d, v.mul(&c));
                }
            }
        }
        Ok(r)
    }

    /// Unnormalized closure trace; every closed loop contributes `TR` of its label product.
    pub fn trace(&self, spec: &DecoratedAlgebraSpec<C>, side: Side) -> C {
        let mut acc = spec.zero();
        for (d, c) in &self.terms {
            acc = acc.add(&c.mul(&closure_value(d, spec, side)));
        }
        acc
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let keys: std::collections::BTreeSet<&DecoratedDiagram> = self.terms.keys().chain(other.terms.keys()).collect();
        self.k == other.k
            && keys.into_iter().all(|d| match (self.terms.get(d), other.terms.get(d)) {
                (Some(a), Some(b)) => a.sub(b).near_zero(tol),
                (Some(a), None) | (None, Some(a)) => a.near_zero(tol),
                (None, None) => true,
            })
    }
}

impl<C: Field> DecoratedElement<C> {
    /// `TR(1)^{-k}` times the closure trace.
    pub fn normalized_trace(&self, spec: &DecoratedAlgebraSpec<C>, side: Side) -> Result<C> {
        let dk = spec.loop_value().pow(self.k as u32);
        let inv = dk.inv().ok_or_else(|| Error::Invalid("zero loop value".into()))?;
        Ok(self.trace(spec, side).mul(&inv))
    }
}

// Left and right closures join the same points and loop values ignore shading,
// so the side does not change the result.
fn closure_value<C: Coeff>(d: &DecoratedDiagram, spec: &DecoratedAlgebraSpec<C>, _side: Side) -> C {
    let k = d.diagram.k();
    let n = 2 * k;
    let sidx = d.diagram.string_index();
    let close = |i: usize| n - 1 - i;
    let mut seen = vec![false; n];
    let mut value = spec.zero().one_like();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let start = if is_start(k, s) { s } else { d.diagram.partner(s) };
        let mut p = start;
        let mut labels = Vec::new();
        loop {
            let q = d.diagram.partner(p);
            seen[p] = true;
            seen[q] = true;
            labels.push(d.labels[sidx[p]]);
            p = close(q);
            if p == start {
                break;
            }
        }
        value = value.mul(&spec.tr(&spec.product(&labels)));
    }
    value
}

/// Product of two decorated basis diagrams as a linear combination.
pub fn multiply_decorated<C: Coeff>(
    x: &DecoratedDiagram,
    y: &DecoratedDiagram,
    spec: &DecoratedAlgebraSpec<C>,
) -> Result<DecoratedElement<C>> {
    let comp: Composition = x.diagram.compose(&y.diagram)?;
    let k = x.diagram.k();
    let (sx, sy) = (x.diagram.string_index(), y.diagram.string_index());
    let label_of = |p: &Piece| match p.layer {
        Layer::Upper => x.labels[sx[p.from]],
        Layer::Lower => y.labels[sy[p.from]],
    };
    let mut scale = spec.zero().one_like();
    for (c0, pieces) in &comp.loops {
        // Odd columns (1-based) carry strings downward.
        let oriented = if c0 % 2 == 0 { pieces.clone() } else { reverse_pieces(pieces) };
        let labels: Vec<usize> = oriented.iter().map(label_of).collect();
        scale = scale.mul(&spec.tr(&spec.product(&labels)));
    }
    let strings = comp.diagram.strings();
    let mut vecs = Vec::with_capacity(strings.len());
    for (pieces, (a, _)) in comp.strings.iter().zip(&strings) {
        let oriented = if is_start(k, *a) { pieces.clone() } else { reverse_pieces(pieces) };
        let labels: Vec<usize> = oriented.iter().map(label_of).collect();
        vecs.push(spec.product(&labels));
    }
    Ok(DecoratedElement::decorate(&comp.diagram, &vecs, &scale))
}

/// A run of `m` parallel strings all labelled by the projection with basis vector `p`.
#[derive(Clone, Debug)]
pub struct Run<C> {
    pub projection: Vec<C>,
    pub tau: C,
    pub m: usize,
}

/// `p_w`: juxtaposition of Jones-Wenzl projections, run `(p, m)` being `f_m`
/// at loop value `tau_p * delta` with every string labelled `p`.
pub fn pw_projection<C: Field>(word: &[Run<C>], delta: &C, tol: f64) -> Result<DecoratedElement<C>> {
    let one = delta.one_like();
    let mut acc: Vec<(TLDiagram, Vec<Vec<C>>, C)> = vec![(TLDiagram::identity(0), vec![], one)];
    for run in word {
        let f = jones_wenzl(run.m, &run.tau.mul(delta), tol)?;
        let mut next = Vec::new();
        for (d0, labels0, c0) in &acc {
            for (d1, c1) in f.terms() {
                let d = d0.juxtapose(d1);
                // Strings of the juxtaposition: left block's then right block's, re-sorted by endpoint.
                let sidx = d.string_index();
                let mut labels = vec![Vec::new(); d.k()];
                let ka = d0.k();
                let kk = d.k();
                let map_a = |i: usize| if i < ka { i } else { 2 * kk - (2 * ka - i) };
                let kb = d1.k();
                let map_b = |i: usize| if i < kb { ka + i } else { 2 * kk - ka - (2 * kb - i) };
                for (s, (a, _)) in d0.strings().into_iter().enumerate() {
                    labels[sidx[map_a(a)]] = labels0[s].clone();
                }
                for (a, _) in d1.strings() {
                    labels[sidx[map_b(a)]] = run.projection.clone();
                }
                next.push((d, labels, c0.mul(c1)));
            }
        }
        acc = next;
    }
    let k: usize = word.iter().map(|r| r.m).sum();
    let mut out = DecoratedElement::zero(k);
    for (d, labels, c) in acc {
        for (dd, v) in DecoratedElement::decorate(&d, &labels, &c).terms {
            out.add_term(dd, v);
        }
    }
    Ok(out)
}
