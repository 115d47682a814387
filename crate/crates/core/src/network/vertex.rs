use super::spin::{decode, SPIN_STATE_GUARD};
use crate::coeff::Coeff;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Tensor with an even number of indices, each of dimension `n`, slots
/// alternating between `V` and `V*`.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexLabel<C> {
    n: usize,
    indices: usize,
    table: Vec<C>,
}

impl<C: Coeff> VertexLabel<C> {
    pub fn from_fn(n: usize, indices: usize, f: impl Fn(&[usize]) -> C) -> Result<Self> {
        if indices % 2 == 1 {
            return Err(Error::Invalid(format!("vertex label needs an even index count, got {indices}")));
        }
        Ok(Self::from_fn_any(n, indices, f))
    }

    fn from_fn_any(n: usize, indices: usize, mut f: impl FnMut(&[usize]) -> C) -> Self {
        let len = n.pow(indices as u32);
        let mut idx = vec![0; indices];
        let table = (0..len)
            .map(|slot| {
                decode(slot, n, &mut idx);
                f(&idx)
            })
            .collect();
        VertexLabel { n, indices, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> usize {
        self.indices
    }

    pub fn get(&self, idx: &[usize]) -> &C {
        &self.table[idx.iter().fold(0, |a, &i| a * self.n + i)]
    }

    pub fn values(&self) -> &[C] {
        &self.table
    }

    pub fn scalar(&self) -> Option<&C> {
        (self.indices == 0).then(|| &self.table[0])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexBox {
    pub label: String,
    /// String id at each slot, clockwise from the marked corner.
    pub strings: Vec<usize>,
}

/// String-connectivity description of a planar network for vertex models.
/// Each string id occurs exactly twice among box slots and boundary points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexNetwork {
    pub strings: usize,
    #[serde(default)]
    pub boxes: Vec<VertexBox>,
    #[serde(default)]
    pub boundary: Vec<usize>,
    /// Closed loops meeting no box.
    #[serde(default)]
    pub loops: usize,
}

impl VertexNetwork {
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![0usize; self.strings];
        for s in self.boxes.iter().flat_map(|b| &b.strings).chain(&self.boundary) {
            *seen.get_mut(*s).ok_or_else(|| Error::Invalid(format!("string {s} out of range")))? += 1;
        }
        if let Some(s) = seen.iter().position(|&c| c != 2) {
            return Err(Error::Invalid(format!("string {s} has {} endpoints", seen[s])));
        }
        Ok(())
    }
}

/// Contract the network: sum over colorings of interior strings of the
/// product of box tensors, boundary string colors as output indices.
pub fn eval_vertex<C: Coeff>(net: &VertexNetwork, n: usize, labels: &BTreeMap<String, VertexLabel<C>>, one: &C) -> Result<VertexLabel<C>> {
    net.validate()?;
    let mut tables = Vec::new();
    for b in &net.boxes {
        let l = labels.get(&b.label).ok_or_else(|| Error::Invalid(format!("unbound label {}", b.label)))?;
        if l.n != n || l.indices != b.strings.len() {
            return Err(Error::Mismatch(format!("label {} has {} indices of dimension {}, box needs {} of dimension {n}", b.label, l.indices, l.n, b.strings.len())));
        }
        tables.push(l);
    }
    let k = net.boundary.len();
    let interior: Vec<usize> = (0..net.strings).filter(|s| !net.boundary.contains(s)).collect();
    let total = (n as u128).checked_pow((k + interior.len()) as u32).unwrap_or(u128::MAX);
    if total > SPIN_STATE_GUARD {
        return Err(Error::SizeGuard(format!("{n}^{} string colorings", k + interior.len())));
    }
    let loop_factor = one.from_int_like(n.pow(net.loops as u32) as i64);
    let mut color = vec![usize::MAX; net.strings];
    let mut bidx = vec![0; k];
    let mut iidx = vec![0; interior.len()];
    let mut idx = Vec::new();
    let n_inner = n.pow(interior.len() as u32);
    let out = VertexLabel::from_fn_any(n, k, |bc| {
        color.iter_mut().for_each(|c| *c = usize::MAX);
        bidx.copy_from_slice(bc);
        for (&s, &c) in net.boundary.iter().zip(&bidx) {
            if color[s] != usize::MAX && color[s] != c {
                return one.zero_like();
            }
            color[s] = c;
        }
        let mut acc = one.zero_like();
        for inner in 0..n_inner {
            decode(inner, n, &mut iidx);
            for (&s, &c) in interior.iter().zip(&iidx) {
                color[s] = c;
            }
            let mut w = one.clone();
            for (b, t) in net.boxes.iter().zip(&tables) {
                idx.clear();
                idx.extend(b.strings.iter().map(|&s| color[s]));
                let v = t.get(&idx);
                if v.is_zero() {
                    w = one.zero_like();
                    break;
                }
                w = w.mul(v);
            }
            acc = acc.add(&w);
        }
        acc.mul(&loop_factor)
    });
    Ok(out)
}
