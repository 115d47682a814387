use crate::coeff::{rat, LaurentPoly};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};

/// Frontier states allowed before the bracket gives up.
pub const BRACKET_STATE_GUARD: usize = 2_000_000;

/// Link diagram in planar-diagram notation. Each crossing lists its four edge
/// labels counterclockwise starting from the incoming under-strand. `loops`
/// counts extra crossingless components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PDLink {
    pub crossings: Vec<[u64; 4]>,
    #[serde(default)]
    pub loops: usize,
}

impl PDLink {
    pub fn new(crossings: Vec<[u64; 4]>, loops: usize) -> Result<Self> {
        let l = PDLink { crossings, loops };
        l.validate()?;
        Ok(l)
    }

    pub fn unknot() -> Self {
        PDLink { crossings: vec![], loops: 1 }
    }

    pub fn hopf() -> Self {
        PDLink { crossings: vec![[4, 1, 3, 2], [2, 3, 1, 4]], loops: 0 }
    }

    pub fn trefoil() -> Self {
        PDLink { crossings: vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], loops: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.crossings.is_empty() && self.loops == 0 {
            return Err(Error::Invalid("empty link diagram".into()));
        }
        let mut count: BTreeMap<u64, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &e in x {
                *count.entry(e).or_default() += 1;
            }
        }
        if let Some((e, c)) = count.iter().find(|(_, &c)| c != 2) {
            return Err(Error::Invalid(format!("edge {e} appears {c} times")));
        }
        Ok(())
    }

    pub fn edges(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn to_json(&self) -> Value {
        json!({"crossings": self.crossings, "loops": self.loops})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let l: PDLink = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        l.validate()?;
        Ok(l)
    }

    /// Closure of a braid on `strands` strands. Letter `i > 0` is the
    /// generator crossing strands `i` and `i+1`, `-i` its inverse.
    pub fn from_braid(strands: usize, word: &[i32]) -> Result<Self> {
        if let Some(&g) = word.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands) {
            return Err(Error::Invalid(format!("braid letter {g} out of range for {strands} strands")));
        }
        let mut pos: Vec<u64> = (1..=strands as u64).collect();
        let start = pos.clone();
        let mut next = strands as u64 + 1;
        let mut crossings = Vec::with_capacity(word.len());
        for &g in word {
            let i = g.unsigned_abs() as usize - 1;
            let (a, b) = (pos[i], pos[i + 1]);
            let (c, d) = (next, next + 1);
            next += 2;
            crossings.push(if g > 0 { [b, d, c, a] } else { [a, b, d, c] });
            pos[i] = c;
            pos[i + 1] = d;
        }
        let rename: HashMap<u64, u64> = pos.iter().zip(&start).filter(|(p, s)| p != s).map(|(&p, &s)| (p, s)).collect();
        for x in &mut crossings {
            for e in x.iter_mut() {
                if let Some(&s) = rename.get(e) {
                    *e = s;
                }
            }
        }
        // Closure identifies strand tops with bottoms; untouched strands close up alone
        // and permuted ones join into longer components.
        let mut loops = 0;
        let mut seen = vec![false; strands];
        for s in 0..strands {
            if seen[s] {
                continue;
            }
            let mut j = s;
            let mut touched = false;
            while !seen[j] {
                seen[j] = true;
                touched |= pos[j] != start[j];
                j = perm_target(word, strands, j);
            }
            if !touched {
                loops += 1;
            }
        }
        PDLink::new(crossings, loops)
    }
}

fn perm_target(word: &[i32], strands: usize, s: usize) -> usize {
    let mut p: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        p.swap(i, i + 1);
    }
    p.iter().position(|&x| x == s).unwrap()
}

/// `-A^2 - A^-2`.
pub fn bracket_delta(var: &str) -> LaurentPoly {
    LaurentPoly::from_terms(var, &[(2, rat(-1, 1)), (-2, rat(-1, 1))])
}

/// Kauffman bracket with `<unknot> = 1`. The A-smoothing of `[a, b, c, d]`
/// joins `a` to `b` and `c` to `d`.
///
/// Crossings are absorbed one at a time; a state records how the open edge
/// ends are paired by the arcs smoothed so far.
pub fn kauffman_bracket(link: &PDLink, var: &str) -> Result<LaurentPoly> {
    link.validate()?;
    let delta = bracket_delta(var);
    let one = LaurentPoly::constant(var, rat(1, 1));
    let a = LaurentPoly::monomial(var, 1, rat(1, 1));
    let ainv = LaurentPoly::monomial(var, -1, rat(1, 1));
    let mut states: HashMap<Vec<(u64, u64)>, LaurentPoly> = HashMap::from([(vec![], one.clone())]);
    for x in crossing_order(&link.crossings) {
        let [p, q, r, s] = link.crossings[x];
        let mut next: HashMap<Vec<(u64, u64)>, LaurentPoly> = HashMap::new();
        for (state, w) in &states {
            let mut open: HashMap<u64, u64> = HashMap::with_capacity(2 * state.len() + 4);
            for &(u, v) in state {
                open.insert(u, v);
                open.insert(v, u);
            }
            for (arcs, f) in [([(p, q), (r, s)], &a), ([(p, s), (q, r)], &ainv)] {
                let mut o = open.clone();
                let closed = arcs.iter().map(|&(u, v)| join(&mut o, u, v)).sum::<usize>();
                let mut wt = w.checked_mul(f)?;
                for _ in 0..closed {
                    wt = wt.checked_mul(&delta)?;
                }
                let mut key: Vec<(u64, u64)> = o.iter().filter(|(u, v)| u < v).map(|(&u, &v)| (u, v)).collect();
                key.sort_unstable();
                match next.get_mut(&key) {
                    Some(acc) => *acc = acc.checked_add(&wt)?,
                    None => {
                        next.insert(key, wt);
                    }
                }
            }
        }
        next.retain(|_, w| !crate::coeff::Coeff::is_zero(w));
        if next.len() > BRACKET_STATE_GUARD {
            return Err(Error::SizeGuard(format!("{} frontier states", next.len())));
        }
        states = next;
    }
    let mut total = states.remove(&vec![]).unwrap_or_else(|| LaurentPoly::zero(var));
    if !link.crossings.is_empty() {
        total = total.div_exact(&delta)?;
    }
    let extra = if link.crossings.is_empty() { link.loops - 1 } else { link.loops };
    for _ in 0..extra {
        total = total.checked_mul(&delta)?;
    }
    Ok(total)
}

/// Adds the arc `u - v`; returns 1 if it closes a loop.
fn join(open: &mut HashMap<u64, u64>, u: u64, v: u64) -> usize {
    if u == v {
        return 1;
    }
    let fu = open.remove(&u);
    let fv = open.remove(&v);
    if fu == Some(v) {
        return 1;
    }
    let a = fu.unwrap_or(u);
    let b = fv.unwrap_or(v);
    if let Some(x) = fu {
        open.remove(&x);
    }
    if let Some(y) = fv {
        open.remove(&y);
    }
    open.insert(a, b);
    open.insert(b, a);
    0
}

/// Greedy order keeping the frontier small.
fn crossing_order(crossings: &[[u64; 4]]) -> Vec<usize> {
    let n = crossings.len();
    let mut done = vec![false; n];
    let mut touched: HashMap<u64, usize> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&i| !done[i])
            .max_by_key(|&i| (crossings[i].iter().filter(|e| touched.get(e).copied().unwrap_or(0) == 1).count(), std::cmp::Reverse(i)))
            .unwrap();
        done[best] = true;
        for e in crossings[best] {
            *touched.entry(e).or_default() += 1;
        }
        order.push(best);
    }
    order
}
