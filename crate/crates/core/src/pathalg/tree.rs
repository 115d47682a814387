use super::graph::PrincipalGraph;
use crate::coeff::{chebyshev_t, Field};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Vertices allowed in a truncated tree.
pub const TREE_GUARD: usize = 1_000_000;

/// A minimal projection `p` of `A`: `n = dim(pA)`, trace weight `tau` and the
/// longest allowed run `lambda` (`None` for no bound).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeSymbol {
    pub name: String,
    #[serde(default = "one")]
    pub n: usize,
    #[serde(default = "unit")]
    pub tau: f64,
    #[serde(default)]
    pub lambda: Option<usize>,
}

fn one() -> usize {
    1
}

fn unit() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TreeSpec {
    pub symbols: Vec<TreeSymbol>,
    pub depth: usize,
}

impl TreeSpec {
    /// `A = Cp + Cq` with `lambda(p) = 1`, `lambda(q) = 2`.
    pub fn two_projection_example(depth: usize) -> Self {
        TreeSpec {
            symbols: vec![
                TreeSymbol { name: "p".into(), n: 1, tau: 1.0, lambda: Some(1) },
                TreeSymbol { name: "q".into(), n: 1, tau: 1.0, lambda: Some(2) },
            ],
            depth,
        }
    }
}

/// Words over the symbols with no run of `p` longer than `lambda(p)`, joined
/// `w -- wp` by `n_p` edges, truncated at length `depth`. Vertex ids follow
/// breadth-first order; the second component lists the words.
pub fn build_tree(spec: &TreeSpec) -> Result<(PrincipalGraph, Vec<Vec<usize>>)> {
    if spec.symbols.is_empty() {
        return Err(Error::Invalid("tree spec has no symbols".into()));
    }
    if let Some(s) = spec.symbols.iter().find(|s| s.n == 0 || s.lambda == Some(0)) {
        return Err(Error::Invalid(format!("symbol {} needs n >= 1 and lambda >= 1", s.name)));
    }
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut edges = Vec::new();
    let mut frontier = vec![0usize];
    for _ in 0..spec.depth {
        let mut next = Vec::new();
        for &w in &frontier {
            for (p, s) in spec.symbols.iter().enumerate() {
                let word = &words[w];
                let run = word.iter().rev().take_while(|&&x| x == p).count();
                if s.lambda.is_some_and(|l| run >= l) {
                    continue;
                }
                let mut child = word.clone();
                child.push(p);
                words.push(child);
                if words.len() > TREE_GUARD {
                    return Err(Error::SizeGuard(format!("tree exceeds {TREE_GUARD} vertices")));
                }
                edges.push((w, words.len() - 1, s.n));
                next.push(words.len() - 1);
            }
        }
        frontier = next;
    }
    Ok((PrincipalGraph::new(words.len(), 0, edges)?, words))
}

/// Normalized trace of `p_w` for `w = p_1^{m_1} ... p_r^{m_r}` with run
/// weights `tau_i`: `prod_i tau_i^{m_i} T_{m_i + 1}(1 / (tau_i delta)^2)`.
pub fn word_trace<C: Field>(runs: &[(C, usize)], delta: &C) -> Result<C> {
    let mut acc = delta.one_like();
    for (tau, m) in runs {
        let x = tau.mul(delta);
        let x2 = x.mul(&x).inv().ok_or_else(|| Error::Invalid("tau delta vanishes".into()))?;
        acc = acc.mul(&tau.pow(*m as u32)).mul(&chebyshev_t(m + 1, &x2));
    }
    Ok(acc)
}

/// Collapses a symbol word into runs `(symbol, length)`.
pub fn runs(word: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &p in word {
        match out.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Vertex counts by depth of the truncated tree.
pub fn tree_level_sizes(spec: &TreeSpec) -> Result<Vec<usize>> {
    let (g, _) = build_tree(spec)?;
    let mut c = g.depth_counts();
    c.resize(spec.depth + 1, 0);
    Ok(c)
}
