use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::HashMap;

/// Non-crossing pairing of the 2k boundary points of a k-box.
///
/// Points are stored 0-indexed: `0..k` run left to right along the top,
/// `k..2k` run right to left along the bottom, so the bottom point in
/// column `t` (1-based) has index `2k - t`. Files use 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TLDiagram {
    k: usize,
    m: Vec<usize>,
}

/// Which diagram a piece of a composed string came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    Upper,
    Lower,
}

/// One traversal of a string of a factor diagram, entering at `from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub layer: Layer,
    pub from: usize,
    pub to: usize,
}

/// Result of stacking one diagram above another.
#[derive(Clone, Debug)]
pub struct Composition {
    pub diagram: TLDiagram,
    /// Pieces of each output string, traced from its smaller endpoint;
    /// strings ordered by smaller endpoint.
    pub strings: Vec<Vec<Piece>>,
    /// Closed middle loops with the 0-based smallest interface column they cross;
    /// pieces traced starting downward from that column.
    pub loops: Vec<(usize, Vec<Piece>)>,
}

pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

impl TLDiagram {
    /// Build from a 0-indexed partner array, validating it.
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.len() % 2 != 0 {
            return Err(Error::Invalid("odd number of boundary points".into()));
        }
        let d = TLDiagram { k: m.len() / 2, m };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_raw(m: Vec<usize>) -> Self {
        TLDiagram { k: m.len() / 2, m }
    }

    fn validate(&self) -> Result<()> {
        let n = self.m.len();
        for (i, &j) in self.m.iter().enumerate() {
            if j >= n || j == i || self.m[j] != i {
                return Err(Error::Invalid(format!("match is not a fixed-point-free involution at point {}", i + 1)));
            }
        }
        let mut stack = Vec::new();
        for i in 0..n {
            let j = self.m[i];
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return Err(Error::Invalid("pairing is crossing".into()));
            }
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner(&self, i: usize) -> usize {
        self.m[i]
    }

    pub fn matching(&self) -> &[usize] {
        &self.m
    }

    pub fn identity(k: usize) -> Self {
        TLDiagram { k, m: (0..2 * k).map(|i| 2 * k - 1 - i).collect() }
    }

    /// Cup-cap joining columns `i` and `i+1` (1-based) on top and bottom.
    pub fn e(k: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= k {
            return Err(Error::Invalid(format!("E_{i} needs 1 <= i < k = {k}")));
        }
        let mut d = Self::identity(k);
        let (a, b) = (i - 1, i);
        let (ba, bb) = (2 * k - i, 2 * k - 1 - i);
        d.m[a] = b;
        d.m[b] = a;
        d.m[ba] = bb;
        d.m[bb] = ba;
        Ok(d)
    }

    /// Index of the bottom point in 0-based column `c`.
    pub fn bottom(&self, c: usize) -> usize {
        2 * self.k - 1 - c
    }

    /// Pairs (a, b) with a < b, sorted by a.
    pub fn strings(&self) -> Vec<(usize, usize)> {
        (0..2 * self.k).filter(|&i| self.m[i] > i).map(|i| (i, self.m[i])).collect()
    }

    /// String number of each point, with strings ordered by smaller endpoint.
    pub fn string_index(&self) -> Vec<usize> {
        let mut idx = vec![0; 2 * self.k];
        for (s, (a, b)) in self.strings().into_iter().enumerate() {
            idx[a] = s;
            idx[b] = s;
        }
        idx
    }

    pub fn through_strings(&self) -> usize {
        (0..self.k).filter(|&i| self.m[i] >= self.k).count()
    }

    /// Reflection in the horizontal midline.
    pub fn star(&self) -> Self {
        let n = 2 * self.k;
        let mut m = vec![0; n];
        for i in 0..n {
            m[n - 1 - i] = n - 1 - self.m[i];
        }
        TLDiagram { k: self.k, m }
    }

    /// Add a through-string on the right.
    pub fn include(&self) -> Self {
        let k = self.k;
        let map = |i: usize| if i < k { i } else { i + 2 };
        let mut m = vec![0; 2 * k + 2];
        for i in 0..2 * k {
            m[map(i)] = map(self.m[i]);
        }
        m[k] = k + 1;
        m[k + 1] = k;
        TLDiagram { k: k + 1, m }
    }

    /// Cyclic shift of all boundary labels by `s` points.
    pub fn shift(&self, s: usize) -> Self {
        let n = 2 * self.k;
        if n == 0 {
            return self.clone();
        }
        let mut m = vec![0; n];
        for i in 0..n {
            m[(i + s) % n] = (self.m[i] + s) % n;
        }
        TLDiagram { k: self.k, m }
    }

    /// Rotation by one shaded click (two boundary points); period k.
    pub fn rotate(&self) -> Self {
        self.shift(2)
    }

    /// Place `self` to the left of `other`.
    pub fn juxtapose(&self, other: &TLDiagram) -> TLDiagram {
        let (ka, kb) = (self.k, other.k);
        let kk = ka + kb;
        let map_a = |i: usize| if i < ka { i } else { 2 * kk - (2 * ka - i) };
        let map_b = |i: usize| if i < kb { ka + i } else { 2 * kk - ka - (2 * kb - i) };
        let mut m = vec![0; 2 * kk];
        for i in 0..2 * ka {
            m[map_a(i)] = map_a(self.m[i]);
        }
        for i in 0..2 * kb {
            m[map_b(i)] = map_b(other.m[i]);
        }
        TLDiagram { k: kk, m }
    }

    /// Stack `self` above `lower` and trace every string and middle loop.
    pub fn compose(&self, lower: &TLDiagram) -> Result<Composition> {
        if self.k != lower.k {
            return Err(Error::Mismatch(format!("k = {} vs {}", self.k, lower.k)));
        }
        let k = self.k;
        let n = 2 * k;
        let mut visited = vec![false; k];
        let mut out = vec![usize::MAX; n];
        let mut strings = Vec::new();
        for start in 0..n {
            if out[start] != usize::MAX {
                continue;
            }
            let mut pieces = Vec::new();
            let (mut layer, mut p) = if start < k { (Layer::Upper, start) } else { (Layer::Lower, start) };
            let end = loop {
                match layer {
                    Layer::Upper => {
                        let q = self.m[p];
                        pieces.push(Piece { layer, from: p, to: q });
                        if q < k {
                            break q;
                        }
                        let c = n - 1 - q;
                        visited[c] = true;
                        layer = Layer::Lower;
                        p = c;
                    }
                    Layer::Lower => {
                        let q = lower.m[p];
                        pieces.push(Piece { layer, from: p, to: q });
                        if q >= k {
                            break q;
                        }
                        visited[q] = true;
                        layer = Layer::Upper;
                        p = n - 1 - q;
                    }
                }
            };
            out[start] = end;
            out[end] = start;
            strings.push(pieces);
        }
        let mut loops = Vec::new();
        for c0 in 0..k {
            if visited[c0] {
                continue;
            }
            let mut pieces = Vec::new();
            let mut c = c0;
            loop {
                visited[c] = true;
                let q = lower.m[c];
                pieces.push(Piece { layer: Layer::Lower, from: c, to: q });
                debug_assert!(q < k);
                visited[q] = true;
                let up = n - 1 - q;
                let r = self.m[up];
                pieces.push(Piece { layer: Layer::Upper, from: up, to: r });
                c = n - 1 - r;
                if c == c0 {
                    break;
                }
            }
            loops.push((c0, pieces));
        }
        Ok(Composition { diagram: TLDiagram { k, m: out }, strings, loops })
    }

    pub fn to_json(&self) -> Value {
        json!({"k": self.k, "match": self.m.iter().map(|x| x + 1).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| Error::Parse("diagram: missing k".into()))? as usize;
        let arr = v.get("match").and_then(Value::as_array).ok_or_else(|| Error::Parse("diagram: missing match".into()))?;
        if arr.len() != 2 * k {
            return Err(Error::Parse(format!("diagram: match has length {}, expected {}", arr.len(), 2 * k)));
        }
        let mut m = Vec::with_capacity(2 * k);
        for x in arr {
            let j = x.as_u64().filter(|&j| j >= 1).ok_or_else(|| Error::Parse("diagram: match entries are 1-based".into()))?;
            m.push(j as usize - 1);
        }
        TLDiagram::new(m)
    }
}

/// All non-crossing pairings of `2k` points, sorted lexicographically.
pub fn tl_basis(k: usize) -> Vec<TLDiagram> {
    colored_basis(&vec![0; 2 * k])
}

/// Non-crossing pairings that only join points of equal color, sorted.
pub(crate) fn colored_basis(colors: &[usize]) -> Vec<TLDiagram> {
    type Pairs = Vec<Vec<(usize, usize)>>;
    fn rec(lo: usize, hi: usize, colors: &[usize], memo: &mut HashMap<(usize, usize), Pairs>) -> Pairs {
        if lo >= hi {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(&(lo, hi)) {
            return v.clone();
        }
        let mut res = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            if colors[j] != colors[lo] {
                continue;
            }
            let inner = rec(lo + 1, j, colors, memo);
            let outer = rec(j + 1, hi, colors, memo);
            for a in &inner {
                for b in &outer {
                    let mut v = Vec::with_capacity(a.len() + b.len() + 1);
                    v.push((lo, j));
                    v.extend_from_slice(a);
                    v.extend_from_slice(b);
                    res.push(v);
                }
            }
        }
        memo.insert((lo, hi), res.clone());
        res
    }
    let n = colors.len();
    let mut memo = HashMap::new();
    let mut ds: Vec<TLDiagram> = rec(0, n, colors, &mut memo)
        .into_iter()
        .map(|pairs| {
            let mut m = vec![0; n];
            for (a, b) in pairs {
                m[a] = b;
                m[b] = a;
            }
            TLDiagram::from_raw(m)
        })
        .collect();
    ds.sort();
    ds
}
