mod common;

use common::{adjacency_power_entry, path_loops};
use num_complex::Complex64;
use planar::coeff::{rat, Coeff, Rational};
use planar::pathalg::*;
use planar::tl::{catalan, gram_rank, pw_projection, DecoratedAlgebraSpec, Run, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

fn graphs() -> Vec<(String, PrincipalGraph)> {
    let mut out: Vec<(String, PrincipalGraph)> = Vec::new();
    for n in 1..=6 {
        out.push((format!("A{n}"), PrincipalGraph::a(n).unwrap()));
    }
    for n in 4..=7 {
        out.push((format!("D{n}"), PrincipalGraph::d(n).unwrap()));
    }
    for n in 6..=8 {
        out.push((format!("E{n}"), PrincipalGraph::e(n).unwrap()));
    }
    out.push(("double".into(), PrincipalGraph::new(3, 0, vec![(0, 1, 1), (1, 2, 2)]).unwrap()));
    out.push(("star".into(), PrincipalGraph::new(4, 1, vec![(0, 1, 1), (1, 2, 1), (1, 3, 2)]).unwrap()));
    out.push(("tree".into(), build_tree(&TreeSpec::two_projection_example(5)).unwrap().0));
    out
}

#[test]
fn walk_counts_match_adjacency_powers() {
    for (name, g) in graphs() {
        for k in 0..=6 {
            let walks = walk_basis(&g, k).unwrap();
            assert_eq!(walks.len() as u128, adjacency_power_entry(g.n(), g.edges(), g.root(), k), "{name}, k = {k}");
            assert!(walks.iter().all(|w| w.vertices.first() == Some(&g.root()) && w.vertices.last() == Some(&g.root())));
        }
    }
}

#[test]
fn path_graph_loops_are_catalan() {
    assert!((0..6).all(|k| walk_basis(&PrincipalGraph::a(2).unwrap(), k).unwrap().len() == 1));
    for n in 2..=7 {
        for k in 0..n {
            assert_eq!(walk_basis(&PrincipalGraph::a(n).unwrap(), k).unwrap().len() as u128, catalan(k), "A{n}, k = {k}");
        }
    }
}

#[test]
fn walk_algebra_associative() {
    for g in [PrincipalGraph::a(4).unwrap(), PrincipalGraph::new(3, 0, vec![(0, 1, 1), (1, 2, 2)]).unwrap()] {
        for k in 1..=3 {
            let b = walk_basis(&g, k).unwrap();
            let mul = |x: Option<Walk>, y: Option<Walk>| match (x, y) {
                (Some(x), Some(y)) => walk_multiply(&x, &y).unwrap(),
                _ => None,
            };
            for x in &b {
                assert_eq!(mul(mul(Some(x.clone()), Some(x.reversed())), Some(x.clone())), Some(x.clone()));
                for y in &b {
                    for z in &b {
                        let l = mul(mul(Some(x.clone()), Some(y.clone())), Some(z.clone()));
                        let r = mul(Some(x.clone()), mul(Some(y.clone()), Some(z.clone())));
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }
    let g = PrincipalGraph::a(4).unwrap();
    let (w1, w2) = (&walk_basis(&g, 1).unwrap()[0], &walk_basis(&g, 2).unwrap()[0]);
    assert!(walk_multiply(w1, w2).is_err());
}

#[test]
fn perron_vectors() {
    for (name, g) in graphs() {
        let tv = perron_trace(&g, None).unwrap();
        let a = g.adjacency();
        for (i, row) in a.iter().enumerate() {
            let at: f64 = row.iter().zip(&tv.t).map(|(&x, y)| x as f64 * y).sum();
            assert!((at - tv.delta * tv.t[i]).abs() < 1e-9, "{name}");
            assert!(tv.t[i] > 0.0, "{name}");
        }
        assert_eq!(tv.t[g.root()], 1.0);
    }
    for n in 1..=8 {
        let tv = perron_trace(&PrincipalGraph::a(n).unwrap(), None).unwrap();
        assert!((tv.delta - 2.0 * (PI / (n + 1) as f64).cos()).abs() < 1e-9, "A{n}");
    }
    let tv = perron_trace(&PrincipalGraph::a(3).unwrap(), Some(2f64.sqrt())).unwrap();
    for (x, y) in tv.t.iter().zip([1.0, 2f64.sqrt(), 1.0]) {
        assert!((x - y).abs() < 1e-9);
    }
    let tv = perron_trace(&PrincipalGraph::a(2).unwrap(), None).unwrap();
    assert!((tv.delta - 1.0).abs() < 1e-9 && (tv.t[1] - 1.0).abs() < 1e-9);
    assert!(perron_trace(&PrincipalGraph::a(3).unwrap(), Some(1.5)).is_err());
}

#[test]
fn tl_gram_rank_counts_path_loops() {
    for n in 2..=4 {
        let g = PrincipalGraph::a(n).unwrap();
        let delta = 2.0 * (PI / (n + 1) as f64).cos();
        for k in 1..=4 {
            let loops = walk_basis(&g, k).unwrap().len();
            assert_eq!(loops as u128, path_loops(n, k));
            assert_eq!(gram_rank(k, delta, 1e-6), loops, "A{n}, k = {k}");
        }
    }
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<Complex64>]) -> Complex64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<Complex64>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, z)| *z).collect()).collect();
            let s = if j % 2 == 0 { 1.0 } else { -1.0 };
            m[0][j] * s * cofactor_det(&minor)
        })
        .sum()
}

#[test]
fn annular_determinant() {
    let one = Complex64::new(1.0, 0.0);
    assert!((delta_matrix_det(3, 3.0, one).unwrap() - cofactor_det(&delta_matrix(3, 3.0, one)).re).abs() < 1e-9);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(3..=7);
        let delta = rng.gen_range(0.5..4.0);
        let omega = Complex64::from_polar(1.0, rng.gen_range(0.0..2.0 * PI));
        let m = delta_matrix(n, delta, omega);
        let want = cofactor_det(&m);
        assert!(want.im.abs() < 1e-9);
        assert!((delta_matrix_det(n, delta, omega).unwrap() - want.re).abs() < 1e-8 * (1.0 + want.re.abs()));
        // Same cofactor oracle expanded along the wrap-around: P_n - P_{n-2} - (-1)^n 2 Re(omega).
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let p = p_even(n, delta) - p_even(n - 2, delta) - sign * 2.0 * omega.re;
        assert!((p - want.re).abs() < 1e-8 * (1.0 + p.abs()), "n = {n}");
    }
    assert!(delta_matrix_det(2, 3.0, one).is_err());
}

#[test]
fn annular_determinant_minimized_at_one() {
    for n in 3..=12 {
        for delta in [2.01, 2.5, 3.0] {
            let at_one = delta_matrix_det(n, delta, Complex64::new(1.0, 0.0)).unwrap();
            assert!(at_one > 0.0, "n = {n}, delta = {delta}");
            if n % 2 == 0 {
                for j in 0..360 {
                    let w = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / 360.0);
                    assert!(delta_matrix_det(n, delta, w).unwrap() >= at_one - 1e-9, "n = {n}, j = {j}");
                }
            }
        }
    }
}

fn two_symbol(delta: &Rational, tau_p: &Rational) -> DecoratedAlgebraSpec<Rational> {
    let (z, o) = (rat(0, 1), rat(1, 1));
    let s = vec![vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]], vec![vec![z.clone(), o.clone()], vec![z, o]]];
    DecoratedAlgebraSpec::new(s, 0, vec![delta.clone(), delta * tau_p]).unwrap()
}

#[test]
fn word_trace_matches_projection_trace() {
    for (delta, tp) in [(rat(5, 1), rat(2, 5)), (rat(7, 1), rat(3, 7)), (rat(9, 2), rat(1, 2))] {
        let tq = rat(1, 1) - &tp;
        let spec = two_symbol(&delta, &tp);
        let proj = [(vec![rat(0, 1), rat(1, 1)], tp.clone()), (vec![rat(1, 1), rat(-1, 1)], tq.clone())];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        for len in 1..=4 {
            for mask in 0..1usize << len {
                words.push((0..len).map(|i| mask >> i & 1).collect());
            }
        }
        for w in words.iter().skip(1) {
            let rs = runs(w);
            let word: Vec<Run<Rational>> = rs.iter().map(|&(s, m)| Run { projection: proj[s].0.clone(), tau: proj[s].1.clone(), m }).collect();
            let want = pw_projection(&word, &delta, 0.0).unwrap().normalized_trace(&spec, Side::Left).unwrap();
            let got = word_trace(&rs.iter().map(|&(s, m)| (proj[s].1.clone(), m)).collect::<Vec<_>>(), &delta).unwrap();
            assert_eq!(got, want, "word {w:?}");
            let as_f = |r: &Rational| r.to_complex().unwrap().re;
            let fruns: Vec<(Complex64, usize)> = rs.iter().map(|&(s, m)| (Complex64::new(as_f(&proj[s].1), 0.0), m)).collect();
            let gotf = word_trace(&fruns, &Complex64::new(as_f(&delta), 0.0)).unwrap();
            assert!((gotf.re - as_f(&want)).abs() < 1e-9);
        }
        assert_eq!(word_trace(&[(tp.clone(), 1)], &delta).unwrap(), tp);
    }
}

fn enumerate_words(spec: &TreeSpec) -> Vec<usize> {
    let mut levels = vec![1usize];
    let mut current: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..spec.depth {
        let mut next = Vec::new();
        for w in &current {
            for s in 0..spec.symbols.len() {
                let mut c = w.clone();
                c.push(s);
                if runs(&c).iter().all(|&(p, m)| spec.symbols[p].lambda.is_none_or(|l| m <= l)) {
                    next.push(c);
                }
            }
        }
        levels.push(next.len());
        current = next;
    }
    levels
}

#[test]
fn tree_levels_match_word_enumeration() {
    let sym = |name: &str, n, lambda| TreeSymbol { name: name.into(), n, tau: 0.5, lambda };
    let specs = [
        TreeSpec::two_projection_example(8),
        TreeSpec { symbols: vec![sym("p", 1, None)], depth: 6 },
        TreeSpec { symbols: vec![sym("p", 1, Some(1)), sym("q", 1, Some(1))], depth: 6 },
        TreeSpec { symbols: vec![sym("p", 2, Some(2)), sym("q", 1, Some(3)), sym("r", 1, None)], depth: 5 },
    ];
    for spec in &specs {
        let (g, words) = build_tree(spec).unwrap();
        assert_eq!(tree_level_sizes(spec).unwrap(), enumerate_words(spec));
        for (v, w) in words.iter().enumerate() {
            assert_eq!(g.dist(v), w.len());
        }
        for &(u, v, m) in g.edges() {
            assert_eq!(words[v][..words[v].len() - 1], words[u][..]);
            assert_eq!(m, spec.symbols[*words[v].last().unwrap()].n);
        }
    }
    let (g, _) = build_tree(&specs[1]).unwrap();
    assert_eq!(g, PrincipalGraph::a(7).unwrap());
    // Alternating words: valence two everywhere except at the leaves.
    let (g, _) = build_tree(&specs[2]).unwrap();
    let mut deg = vec![0; g.n()];
    for &(u, v, _) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
    }
    for v in 0..g.n() {
        assert_eq!(deg[v], if g.dist(v) == specs[2].depth { 1 } else { 2 });
    }
    assert!(build_tree(&TreeSpec { symbols: vec![], depth: 3 }).is_err());
}

#[test]
fn ade_verdicts() {
    let v = |f| ade_admissibility(f).unwrap();
    for n in [5, 7, 9, 11] {
        let r = v(Ade::D(n));
        assert!(!r.admissible, "D{n}");
        assert_eq!((r.critical_depth, r.coxeter), (Some(n - 2), 2 * n - 2));
    }
    for n in [4, 6, 8, 10] {
        let r = v(Ade::D(n));
        assert!(r.admissible);
        assert_eq!(r.chirality, vec![(n - 2) / 2], "D{n}");
        assert!((r.chirality_values()[0] + 1.0).norm() < 1e-12);
    }
    let e7 = v(Ade::E7);
    assert!(!e7.admissible);
    assert_eq!(e7.coxeter, 18);
    let e6 = v(Ade::E6);
    assert_eq!((e6.critical_depth, e6.coxeter, e6.chirality.clone()), (Some(3), 12, vec![1, 2]));
    let e8 = v(Ade::E8);
    assert_eq!((e8.critical_depth, e8.coxeter, e8.chirality.clone()), (Some(5), 30, vec![1, 4]));
    for w in e8.chirality_values() {
        assert!((w.re - (2.0 * PI / 5.0).cos()).abs() < 1e-12);
    }
    for n in 1..=6 {
        let r = v(Ade::A(n));
        assert!(r.admissible && r.critical_depth.is_none());
        assert_eq!(r.coxeter, n + 1);
    }
    assert!(Ade::parse("F", Some(4)).is_err());
    assert!(Ade::parse("E", Some(9)).is_err());
    assert_eq!(Ade::parse("d", Some(5)).unwrap(), Ade::D(5));
}
