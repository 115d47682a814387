use crate::{Error, Result};
use serde_json::{json, Value};
use std::collections::VecDeque;

/// Walks enumerated at most by [`walk_basis`].
pub const WALK_GUARD: u128 = 1_000_000;

/// Connected bipartite multigraph with a root `*`; edges carry multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalGraph {
    n: usize,
    root: usize,
    edges: Vec<(usize, usize, usize)>,
    /// `(neighbor, edge index)` per vertex.
    adj: Vec<Vec<(usize, usize)>>,
    dist: Vec<usize>,
}

impl PrincipalGraph {
    pub fn new(n: usize, root: usize, edges: Vec<(usize, usize, usize)>) -> Result<Self> {
        if root >= n {
            return Err(Error::Invalid(format!("root {root} out of range")));
        }
        let mut adj = vec![vec![]; n];
        for (i, &(u, v, m)) in edges.iter().enumerate() {
            if u >= n || v >= n || u == v || m == 0 {
                return Err(Error::Invalid(format!("bad edge ({u}, {v}, {m})")));
            }
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if dist.contains(&usize::MAX) {
            return Err(Error::Invalid("graph is not connected".into()));
        }
        if let Some(&(u, v, _)) = edges.iter().find(|&&(u, v, _)| dist[u] % 2 == dist[v] % 2) {
            return Err(Error::Invalid(format!("edge ({u}, {v}) joins vertices of equal parity")));
        }
        Ok(PrincipalGraph { n, root, edges, adj, dist })
    }

    /// Path `0 - 1 - ... - (n-1)` rooted at 0.
    pub fn a(n: usize) -> Result<Self> {
        Self::new(n, 0, (1..n).map(|i| (i - 1, i, 1)).collect())
    }

    /// Path on `n - 1` vertices with one more vertex on the second to last,
    /// rooted at the far end.
    pub fn d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::Invalid(format!("D_{n} needs n >= 4")));
        }
        let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i, 1)).collect();
        e.push((n - 3, n - 1, 1));
        Self::new(n, 0, e)
    }

    /// `E_6`, `E_7`, `E_8`: a path with a short arm of length one on the vertex
    /// two steps from its end, rooted at the end of the long arm.
    pub fn e(n: usize) -> Result<Self> {
        if !(6..=8).contains(&n) {
            return Err(Error::Invalid(format!("E_{n} is not supported")));
        }
        let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i, 1)).collect();
        e.push((n - 4, n - 1, 1));
        Self::new(n, 0, e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn dist(&self, v: usize) -> usize {
        self.dist[v]
    }

    pub fn depth_counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.dist.iter().max().map_or(0, |d| d + 1)];
        for &d in &self.dist {
            c[d] += 1;
        }
        c
    }

    pub fn adjacency(&self) -> Vec<Vec<u128>> {
        let mut a = vec![vec![0u128; self.n]; self.n];
        for &(u, v, m) in &self.edges {
            a[u][v] += m as u128;
            a[v][u] += m as u128;
        }
        a
    }

    /// Number of loops of length `2k` at the root, with edge copies.
    pub fn loop_count(&self, k: usize) -> u128 {
        let a = self.adjacency();
        let mut v = vec![0u128; self.n];
        v[self.root] = 1;
        for _ in 0..2 * k {
            v = (0..self.n).map(|i| (0..self.n).map(|j| a[i][j].saturating_mul(v[j])).fold(0u128, u128::saturating_add)).collect();
        }
        v[self.root]
    }

    pub fn to_json(&self) -> Value {
        json!({"vertices": self.n, "root": self.root, "edges": self.edges.iter().map(|&(u, v, m)| [u, v, m]).collect::<Vec<_>>()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("graph: {m}"));
        let root = v.get("root").and_then(Value::as_u64).unwrap_or(0) as usize;
        let raw: Vec<Vec<usize>> = serde_json::from_value(v.get("edges").cloned().ok_or_else(|| bad("missing edges"))?).map_err(|e| bad(&e.to_string()))?;
        let mut edges = Vec::with_capacity(raw.len());
        for e in raw {
            match e[..] {
                [a, b] => edges.push((a, b, 1)),
                [a, b, m] => edges.push((a, b, m)),
                _ => return Err(bad("edge must be [u, v] or [u, v, multiplicity]")),
            }
        }
        let inferred = edges.iter().map(|&(a, b, _)| a.max(b) + 1).max().unwrap_or(1).max(root + 1);
        let n = v.get("vertices").and_then(Value::as_u64).map_or(inferred, |x| x as usize);
        Self::new(n, root, edges)
    }
}

/// Closed walk of length `2k` at the root; `steps[i] = (edge, copy)` leads
/// from `vertices[i]` to `vertices[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub steps: Vec<(usize, usize)>,
}

impl Walk {
    pub fn k(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn reversed(&self) -> Walk {
        Walk { vertices: self.vertices.iter().rev().copied().collect(), steps: self.steps.iter().rev().copied().collect() }
    }

    fn first_half(&self) -> (&[usize], &[(usize, usize)]) {
        let k = self.k();
        (&self.vertices[..=k], &self.steps[..k])
    }

    fn second_half_reversed(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let k = self.k();
        (self.vertices[k..].iter().rev().copied().collect(), self.steps[k..].iter().rev().copied().collect())
    }
}

pub fn walk_basis(g: &PrincipalGraph, k: usize) -> Result<Vec<Walk>> {
    let count = g.loop_count(k);
    if count > WALK_GUARD {
        return Err(Error::SizeGuard(format!("{count} walks of length {}", 2 * k)));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut w = Walk { vertices: vec![g.root], steps: vec![] };
    extend(g, 2 * k, &mut w, &mut out);
    Ok(out)
}

fn extend(g: &PrincipalGraph, len: usize, w: &mut Walk, out: &mut Vec<Walk>) {
    let here = *w.vertices.last().unwrap();
    let left = len - w.steps.len();
    if left == 0 {
        if here == g.root {
            out.push(w.clone());
        }
        return;
    }
    if g.dist[here] > left {
        return;
    }
    for &(v, e) in &g.adj[here] {
        for copy in 0..g.edges[e].2 {
            w.vertices.push(v);
            w.steps.push((e, copy));
            extend(g, len, w, out);
            w.vertices.pop();
            w.steps.pop();
        }
    }
}

/// `w1 w2` is the first half of `w1` followed by the second half of `w2` when
/// the second half of `w1` retraces the first half of `w2`, and zero otherwise.
pub fn walk_multiply(w1: &Walk, w2: &Walk) -> Result<Option<Walk>> {
    if w1.steps.len() != w2.steps.len() || w1.steps.len() % 2 == 1 {
        return Err(Error::Mismatch(format!("walk lengths {} and {}", w1.steps.len(), w2.steps.len())));
    }
    let (v1, s1) = w1.second_half_reversed();
    let (v2, s2) = w2.first_half();
    if v1 != v2 || s1 != s2 {
        return Ok(None);
    }
    let k = w1.k();
    let mut vertices = w1.vertices[..=k].to_vec();
    vertices.extend_from_slice(&w2.vertices[k + 1..]);
    let mut steps = w1.steps[..k].to_vec();
    steps.extend_from_slice(&w2.steps[k..]);
    Ok(Some(Walk { vertices, steps }))
}

/// Perron eigenvector with `t_* = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceVector {
    pub delta: f64,
    pub t: Vec<f64>,
}

const PERRON_MAX_ITER: usize = 1_000_000;

/// Power iteration on `A + 1` from the all-ones vector. A given `delta` must
/// agree with the computed Perron eigenvalue.
pub fn perron_trace(g: &PrincipalGraph, delta: Option<f64>) -> Result<TraceVector> {
    let a: Vec<Vec<f64>> = g.adjacency().into_iter().map(|r| r.into_iter().map(|x| x as f64).collect()).collect();
    let apply = |t: &[f64]| -> Vec<f64> { a.iter().map(|r| r.iter().zip(t).map(|(x, y)| x * y).sum()).collect() };
    let mut t = vec![1.0; g.n];
    let mut lambda = 0.0;
    let mut converged = g.n == 1;
    for _ in 0..PERRON_MAX_ITER {
        let at = apply(&t);
        let next: Vec<f64> = at.iter().zip(&t).map(|(x, y)| x + y).collect();
        let norm = next.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        t = next.into_iter().map(|x| x / norm).collect();
        let at = apply(&t);
        lambda = at.iter().zip(&t).map(|(x, y)| x * y).sum::<f64>() / t.iter().map(|x| x * x).sum::<f64>();
        let resid = at.iter().zip(&t).fold(0.0f64, |m, (x, y)| m.max((x - lambda * y).abs()));
        if resid < 1e-12 {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(format!("power iteration did not converge in {PERRON_MAX_ITER} steps")));
    }
    if let Some(d) = delta {
        if (d - lambda).abs() > 1e-9 {
            return Err(Error::Invalid(format!("delta {d} is not the Perron eigenvalue {lambda}")));
        }
    }
    let r = t[g.root];
    Ok(TraceVector { delta: lambda, t: t.into_iter().map(|x| x / r).collect() })
}
