use super::hadamard::GenHadamard;
use crate::coeff::{rat, Coeff, CyclotomicInt, Rational};
use crate::linalg::UnionFind;
use crate::{Error, Result};
use num_complex::Complex64;
use std::collections::BTreeMap;

/// `Prof(u)^{c,d}_{a,b} = sum_x u^x_a conj(u^x_b) conj(u^x_c) u^x_d`
/// on unit-modulus entries, row `(a,b)`, column `(c,d)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ProfileMatrix {
    Exact { q: usize, entries: Vec<CyclotomicInt> },
    Float { q: usize, entries: Vec<Complex64>, tol: f64 },
}

impl ProfileMatrix {
    pub fn q(&self) -> usize {
        match self {
            ProfileMatrix::Exact { q, .. } | ProfileMatrix::Float { q, .. } => *q,
        }
    }

    fn slot(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        let q = self.q();
        ((a * q + b) * q + c) * q + d
    }

    pub fn get(&self, a: usize, b: usize, c: usize, d: usize) -> Complex64 {
        let s = self.slot(a, b, c, d);
        match self {
            ProfileMatrix::Exact { entries, .. } => entries[s].to_complex_value(),
            ProfileMatrix::Float { entries, .. } => entries[s],
        }
    }

    pub fn exact(&self, a: usize, b: usize, c: usize, d: usize) -> Option<&CyclotomicInt> {
        match self {
            ProfileMatrix::Exact { entries, .. } => Some(&entries[self.slot(a, b, c, d)]),
            ProfileMatrix::Float { .. } => None,
        }
    }

    /// Exact in root mode, `|z| < tol * Q` otherwise.
    pub fn is_nonzero(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let s = self.slot(a, b, c, d);
        match self {
            ProfileMatrix::Exact { entries, .. } => !entries[s].is_zero(),
            ProfileMatrix::Float { entries, tol, q } => entries[s].norm() >= tol * *q as f64,
        }
    }

    /// `Prof^{c,d}_{a,b} = conj(Prof^{a,b}_{c,d})`.
    pub fn is_hermitian(&self) -> bool {
        let q = self.q();
        let all = |f: &dyn Fn(usize, usize) -> bool| (0..q * q).all(|r| (0..q * q).all(|c| f(r, c)));
        match self {
            ProfileMatrix::Exact { entries, .. } => all(&|r, c| entries[r * q * q + c] == entries[c * q * q + r].conj()),
            ProfileMatrix::Float { entries, tol, .. } => all(&|r, c| (entries[r * q * q + c] - entries[c * q * q + r].conj()).norm() < tol * q as f64),
        }
    }
}

pub fn profile(h: &GenHadamard) -> ProfileMatrix {
    let q = h.q();
    match h.root_data() {
        Some((order, exp)) => {
            let o = order as usize;
            let mut entries = Vec::with_capacity(q.pow(4));
            let mut counts = vec![0i64; o];
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        for d in 0..q {
                            counts.iter_mut().for_each(|n| *n = 0);
                            for r in exp {
                                counts[(r[a] as usize + r[d] as usize + 2 * o - r[b] as usize - r[c] as usize) % o] += 1;
                            }
                            entries.push(CyclotomicInt::from_exponent_counts(&counts, order));
                        }
                    }
                }
            }
            ProfileMatrix::Exact { q, entries }
        }
        None => {
            let rows = h.to_complex_rows();
            let mut entries = Vec::with_capacity(q.pow(4));
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        for d in 0..q {
                            entries.push(rows.iter().map(|r| r[a] * r[b].conj() * r[c].conj() * r[d]).sum());
                        }
                    }
                }
            }
            ProfileMatrix::Float { q, entries, tol: h.tol().unwrap() }
        }
    }
}

/// Connected components of the graph on pairs `(a,b)` joined when the
/// profile entry between them is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentReport {
    pub q: usize,
    pub members: Vec<Vec<(usize, usize)>>,
    pub tol: Option<f64>,
}

impl ComponentReport {
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    /// Normalized trace `n / Q^2` of each minimal projection.
    pub fn traces(&self) -> Vec<Rational> {
        let q2 = (self.q * self.q) as i64;
        self.members.iter().map(|m| rat(m.len() as i64, q2)).collect()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut sizes = self.sizes();
        sizes.sort_unstable();
        let mut traces = self.traces();
        traces.sort();
        Fingerprint { sizes, traces }
    }
}

/// Sorted component sizes and traces, invariant under Hadamard equivalence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fingerprint {
    pub sizes: Vec<usize>,
    pub traces: Vec<Rational>,
}

pub fn components(h: &GenHadamard) -> Result<ComponentReport> {
    let p = profile(h);
    if !p.is_hermitian() {
        return Err(Error::Invalid("profile matrix is not conjugate symmetric".into()));
    }
    let q = h.q();
    let mut uf = UnionFind::new(q * q);
    for r in 0..q * q {
        for c in r + 1..q * q {
            if p.is_nonzero(r / q, r % q, c / q, c % q) {
                uf.union(r, c);
            }
        }
    }
    let members = uf.groups().into_iter().map(|g| g.into_iter().map(|i| (i / q, i % q)).collect()).collect();
    Ok(ComponentReport { q, members, tol: h.tol() })
}

pub fn equivalence_fingerprint(h: &GenHadamard) -> Result<Fingerprint> {
    Ok(components(h)?.fingerprint())
}

#[derive(Clone, Debug, PartialEq)]
pub struct StandardnessReport {
    pub q: usize,
    pub count: usize,
    pub standard: bool,
}

impl StandardnessReport {
    pub fn verdict(&self) -> String {
        if self.standard {
            "standard-up-to-gauge".into()
        } else {
            format!("not standard: dim P_2 = {} < Q = {}", self.count, self.q)
        }
    }
}

/// Standard up to gauge exactly when `dim P^u_2 = Q`.
pub fn standardness_report(h: &GenHadamard) -> Result<StandardnessReport> {
    let count = components(h)?.count();
    Ok(StandardnessReport { q: h.q(), count, standard: count == h.q() })
}

/// Solution of `sum_d u^d_a conj(u^d_b) x^c_d = u^c_a conj(u^c_b) y^b_a`;
/// `x[c][d]` and `y[a][b]`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarTriangleSolution {
    pub x: Vec<Vec<Complex64>>,
    pub y: Vec<Vec<Complex64>>,
}

/// Minimal projections of `P^u_2`: for each component, `x` is the orthogonal
/// projection onto the span of its vectors `v_(a,b)` and `y` its indicator.
pub fn star_triangle_solve(h: &GenHadamard) -> Result<Vec<StarTriangleSolution>> {
    let rep = components(h)?;
    let q = h.q();
    let tol = 1e-9 * q as f64;
    Ok(rep
        .members
        .iter()
        .map(|m| {
            let mut basis: Vec<Vec<Complex64>> = Vec::new();
            for &(a, b) in m {
                let mut v = h.v(a, b);
                for _ in 0..2 {
                    for w in &basis {
                        let c: Complex64 = w.iter().zip(&v).map(|(wi, vi)| wi.conj() * vi).sum();
                        v.iter_mut().zip(w).for_each(|(vi, wi)| *vi -= c * wi);
                    }
                }
                let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if n > tol {
                    basis.push(v.into_iter().map(|z| z / n).collect());
                }
            }
            let x = (0..q).map(|c| (0..q).map(|d| basis.iter().map(|w| w[c] * w[d].conj()).sum()).collect()).collect();
            let mut y = vec![vec![Complex64::new(0.0, 0.0); q]; q];
            for &(a, b) in m {
                y[a][b] = Complex64::new(1.0, 0.0);
            }
            StarTriangleSolution { x, y }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Prop21117Report {
    pub star: usize,
    /// The `(Q-1)`-cycle on the other spins, as the orbit of the first one.
    pub cycle: Vec<usize>,
    pub dim_p2: usize,
    pub conclusion_holds: bool,
}

/// Checks the hypotheses "Q-1 prime", "a fixed index with all-ones row and
/// column" and "a (Q-1)-cycle g with u^{ga}_{gb} = u^a_b", then the
/// conclusion `dim P^u_2 = 2` or standard.
pub fn prop_21117_check(h: &GenHadamard) -> Result<Prop21117Report> {
    let q = h.q();
    if !super::hadamard::is_prime(q.wrapping_sub(1)) {
        return Err(Error::HypothesisNotMet(format!("Q - 1 = {} is not prime", q as i64 - 1)));
    }
    let one = Complex64::new(1.0, 0.0);
    let tol = h.tol().unwrap_or(1e-12);
    let eq = |x: Complex64, y: Complex64| (x - y).norm() <= tol;
    let star = (0..q)
        .find(|&s| (0..q).all(|a| eq(h.entry(a, s), one) && eq(h.entry(s, a), one)))
        .ok_or_else(|| Error::HypothesisNotMet("no index * with u^a_* = u^*_a = 1".into()))?;
    let others: Vec<usize> = (0..q).filter(|&i| i != star).collect();
    let mut cycle = vec![others[0]];
    let mut used = vec![false; q];
    used[star] = true;
    used[others[0]] = true;
    if !extend_cycle(h, &eq, &mut cycle, &mut used) {
        return Err(Error::HypothesisNotMet("no cyclic symmetry of order Q - 1 fixing *".into()));
    }
    let dim_p2 = components(h)?.count();
    Ok(Prop21117Report { star, cycle, dim_p2, conclusion_holds: dim_p2 == 2 || dim_p2 == q })
}

/// Depth-first search for `g = (c_0 c_1 ... c_{n-1})` preserving `u`.
fn extend_cycle(h: &GenHadamard, eq: &dyn Fn(Complex64, Complex64) -> bool, cycle: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = h.q() - 1;
    let g: BTreeMap<usize, usize> = cycle.windows(2).map(|w| (w[0], w[1])).collect();
    let consistent = |g: &BTreeMap<usize, usize>| g.iter().all(|(&a, &ga)| g.iter().all(|(&b, &gb)| eq(h.entry(ga, gb), h.entry(a, b))));
    if cycle.len() == n {
        let mut g = g;
        g.insert(cycle[n - 1], cycle[0]);
        return consistent(&g);
    }
    let last = *cycle.last().unwrap();
    for c in 0..h.q() {
        if used[c] {
            continue;
        }
        let mut g2 = g.clone();
        g2.insert(last, c);
        if !consistent(&g2) {
            continue;
        }
        used[c] = true;
        cycle.push(c);
        if extend_cycle(h, eq, cycle, used) {
            return true;
        }
        cycle.pop();
        used[c] = false;
    }
    false
}
