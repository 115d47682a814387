use super::diagram::{colored_basis, TLDiagram};
use super::element::TLElement;
use crate::coeff::Coeff;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Colored diagrams: `n` blocks of `c` colors per row, colors running
/// `0..c` then `c..0` alternately, identical on top and bottom rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FussCatalan {
    pub n: usize,
    pub c: usize,
    pattern: Vec<usize>,
}

impl FussCatalan {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::Invalid("need at least one color".into()));
        }
        let pattern = (0..n)
            .flat_map(|b| (0..c).map(move |j| if b % 2 == 0 { j } else { c - 1 - j }))
            .collect();
        Ok(FussCatalan { n, c, pattern })
    }

    /// Color of each column.
    pub fn pattern(&self) -> &[usize] {
        &self.pattern
    }

    pub fn k(&self) -> usize {
        self.n * self.c
    }

    pub fn point_color(&self, i: usize) -> usize {
        let k = self.k();
        if i < k {
            self.pattern[i]
        } else {
            self.pattern[2 * k - 1 - i]
        }
    }

    pub fn basis(&self) -> Vec<TLDiagram> {
        let k = self.k();
        let colors: Vec<usize> = (0..2 * k).map(|i| self.point_color(i)).collect();
        colored_basis(&colors)
    }

    pub fn is_valid(&self, d: &TLDiagram) -> bool {
        d.k() == self.k() && (0..2 * d.k()).all(|i| self.point_color(i) == self.point_color(d.partner(i)))
    }

    /// Product with loop factor `a[color]` per removed loop.
    pub fn multiply<C: Coeff>(&self, x: &TLElement<C>, y: &TLElement<C>, a: &[C]) -> Result<TLElement<C>> {
        if a.len() != self.c {
            return Err(Error::Mismatch(format!("{} loop parameters for {} colors", a.len(), self.c)));
        }
        if x.k() != self.k() || y.k() != self.k() {
            return Err(Error::Mismatch("element size does not match n*c".into()));
        }
        for (d, _) in x.terms().chain(y.terms()) {
            if !self.is_valid(d) {
                return Err(Error::Invalid("diagram joins points of different colors".into()));
            }
        }
        let mut r = TLElement::zero(self.k());
        for (dx, cx) in x.terms() {
            for (dy, cy) in y.terms() {
                let comp = dx.compose(dy)?;
                let mut counts: BTreeMap<usize, u32> = BTreeMap::new();
                for (c0, _) in &comp.loops {
                    *counts.entry(self.pattern[*c0]).or_default() += 1;
                }
                let mut coef = cx.mul(cy);
                for (col, e) in counts {
                    coef = coef.mul(&a[col].pow(e));
                }
                r.add_term(comp.diagram, coef);
            }
        }
        Ok(r)
    }
}

/// C(3n, n) / (2n + 1)
pub fn fuss_catalan_number(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * (3 * n as u128 - i) / (i + 1);
    }
    c / (2 * n as u128 + 1)
}
