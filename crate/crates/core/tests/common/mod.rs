//! Brute-force oracles shared by the integration tests. None of these call
//! the evaluators they are used to check.
#![allow(dead_code)]

use num_complex::Complex64;
use planar::coeff::{rat, Coeff, LaurentPoly, Rational};
use planar::network::{PDLink, SpinLabel};
use std::collections::BTreeMap;

pub fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms("A", &terms.iter().map(|&(e, c)| (e, rat(c, 1))).collect::<Vec<_>>())
}

fn find(p: &mut Vec<usize>, x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    p[x] = r;
    r
}

/// Number of closed curves after smoothing every crossing by `choice`
/// (`true` joins `(a,b),(c,d)`, `false` joins `(a,d),(b,c)`).
fn loops_after(link: &PDLink, choice: &[bool]) -> usize {
    let mut ids: BTreeMap<u64, usize> = BTreeMap::new();
    for c in &link.crossings {
        for &l in c {
            let n = ids.len();
            ids.entry(l).or_insert(n);
        }
    }
    let mut p: Vec<usize> = (0..ids.len()).collect();
    for (c, &a) in link.crossings.iter().zip(choice) {
        let [w, x, y, z] = c.map(|l| ids[&l]);
        let pairs = if a { [(w, x), (y, z)] } else { [(w, z), (x, y)] };
        for (u, v) in pairs {
            let (ru, rv) = (find(&mut p, u), find(&mut p, v));
            p[ru] = rv;
        }
    }
    (0..ids.len()).filter(|&i| find(&mut p, i) == i).count()
}

/// Kauffman bracket by summing over all `2^n` states.
pub fn bracket_state_sum(link: &PDLink) -> LaurentPoly {
    let n = link.crossings.len();
    let d = lp(&[(2, -1), (-2, -1)]);
    let mut total = lp(&[]);
    for mask in 0u64..(1 << n) {
        let choice: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 0).collect();
        let a = choice.iter().filter(|&&c| c).count() as i64;
        let loops = loops_after(link, &choice) + link.loops;
        let mut term = lp(&[(2 * a - n as i64, 1)]);
        for _ in 1..loops {
            term = term.mul(&d);
        }
        total = total.add(&term);
    }
    total
}

/// Proper `q`-colorings by enumeration.
pub fn colorings(n: usize, edges: &[(usize, usize)], q: usize) -> u64 {
    let mut count = 0;
    let mut c = vec![0usize; n];
    let total = q.pow(n as u32);
    for mut s in 0..total {
        for x in c.iter_mut() {
            *x = s % q;
            s /= q;
        }
        if edges.iter().all(|&(u, v)| c[u] != c[v]) {
            count += 1;
        }
    }
    count
}

/// Small graphs with at most 8 vertices.
pub fn graph_corpus() -> Vec<(&'static str, usize, Vec<(usize, usize)>)> {
    let cycle = |n: usize| (0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>();
    let complete = |n: usize| (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect::<Vec<_>>();
    let mut cube = Vec::new();
    for v in 0..8usize {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                cube.push((v, w));
            }
        }
    }
    let mut wheel = cycle(7);
    wheel.extend((0..7).map(|i| (i, 7)));
    vec![
        ("vertex", 1, vec![]),
        ("edge", 2, vec![(0, 1)]),
        ("path4", 4, vec![(0, 1), (1, 2), (2, 3)]),
        ("triangle", 3, cycle(3)),
        ("c5", 5, cycle(5)),
        ("c8", 8, cycle(8)),
        ("k4", 4, complete(4)),
        ("k5", 5, complete(5)),
        ("cube", 8, cube),
        ("wheel7", 8, wheel),
        ("two_triangles", 6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
        ("star", 6, (1..6).map(|i| (0, i)).collect()),
    ]
}

/// Links with at most six crossings: named codes and braid closures.
pub fn link_corpus() -> Vec<(String, PDLink)> {
    let mut out = vec![
        ("unknot".to_string(), PDLink::unknot()),
        ("unlink2".to_string(), PDLink::new(vec![], 2).unwrap()),
        ("hopf".to_string(), PDLink::hopf()),
        ("trefoil".to_string(), PDLink::trefoil()),
        ("kink".to_string(), PDLink::new(vec![[1, 1, 2, 2]], 0).unwrap()),
    ];
    let braids: &[(usize, &[i32])] = &[
        (2, &[1, 1]),
        (2, &[1, 1, 1]),
        (2, &[-1, -1, -1, -1]),
        (3, &[1, -2, 1, -2]),
        (3, &[1, 2, 1, 2]),
        (3, &[1, 1, 2, -1, 2, 2]),
        (4, &[1, 2, 3, -1, -2]),
        (4, &[1, -3, 2, 2, -1, 3]),
        (2, &[1, 1, 1, 1, 1, 1]),
    ];
    for (s, w) in braids {
        out.push((format!("braid{s}{w:?}"), PDLink::from_braid(*s, w).unwrap()));
    }
    out
}

/// `n x n` rational matrix rank by fraction-exact elimination.
pub fn rank_rational(m: &[Vec<Rational>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !Coeff::is_zero(&a[r][c])) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !Coeff::is_zero(&a[r][c]) {
                let f = &a[r][c] / &a[rank][c];
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Path graph `A_n` as an adjacency matrix; loops of length `2k` at an end.
pub fn path_loops(n: usize, k: usize) -> u128 {
    let mut v = vec![0u128; n];
    v[0] = 1;
    for _ in 0..2 * k {
        v = (0..n).map(|i| if i > 0 { v[i - 1] } else { 0 } + if i + 1 < n { v[i + 1] } else { 0 }).collect();
    }
    v[0]
}

/// `(A^{2k})_{root,root}` from an edge list with multiplicities.
pub fn adjacency_power_entry(n: usize, edges: &[(usize, usize, usize)], root: usize, k: usize) -> u128 {
    let mut a = vec![vec![0u128; n]; n];
    for &(u, v, m) in edges {
        a[u][v] += m as u128;
        a[v][u] += m as u128;
    }
    let mut v = vec![0u128; n];
    v[root] = 1;
    for _ in 0..2 * k {
        v = (0..n).map(|i| (0..n).map(|j| a[i][j] * v[j]).sum()).collect();
    }
    v[root]
}

pub fn cdot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Complex rank by Gaussian elimination with full pivoting.
pub fn rank_complex(m: &[Vec<Complex64>], tol: f64) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let scale = a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let mut rank = 0;
    while rank < rows.min(cols) {
        let mut best = (0.0, 0, 0);
        for r in rank..rows {
            for c in rank..cols {
                if a[r][c].norm() > best.0 {
                    best = (a[r][c].norm(), r, c);
                }
            }
        }
        if best.0 <= tol * scale {
            break;
        }
        a.swap(rank, best.1);
        for row in a.iter_mut() {
            row.swap(rank, best.2);
        }
        let pivot = a[rank].clone();
        for r in rank + 1..rows {
            let f = a[r][rank] / pivot[rank];
            for (x, y) in a[r].iter_mut().zip(&pivot) {
                *x -= f * y;
            }
        }
        rank += 1;
    }
    rank
}

/// `(xy)(a,b,c,d) = sum_{u,v} x(a,b,v,u) y(u,v,c,d)` over four spins, as a flat
/// table with slot `a*64 + b*16 + c*4 + d`.
pub fn contract(x: &SpinLabel<Rational>, y: &SpinLabel<Rational>) -> Vec<Rational> {
    let mut out = Vec::with_capacity(256);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut s = rat(0, 1);
                    for u in 0..4 {
                        for v in 0..4 {
                            s += x.get(&[a, b, v, u]) * y.get(&[u, v, c, d]);
                        }
                    }
                    out.push(s);
                }
            }
        }
    }
    out
}

pub fn table(v: Vec<Rational>) -> SpinLabel<Rational> {
    SpinLabel::from_fn(4, 4, &rat(0, 1), |s| v[s[0] * 64 + s[1] * 16 + s[2] * 4 + s[3]].clone())
}
