//! Small dense linear algebra helpers and a union-find.

use num_complex::Complex64;

/// Rank by Gaussian elimination with full pivoting.
///
/// A pivot counts as nonzero when it exceeds `rel_tol` times the largest
/// absolute entry of the input matrix.
pub fn rank_f64(m: &[Vec<f64>], rel_tol: f64) -> usize {
    let c: Vec<Vec<Complex64>> = m.iter().map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect()).collect();
    rank_complex(&c, rel_tol)
}

pub fn rank_complex(m: &[Vec<Complex64>], rel_tol: f64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Complex64>> = m.to_vec();
    let scale = a.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let thresh = rel_tol * scale;
    let mut rank = 0;
    let mut col_used = vec![false; cols];
    for r in 0..rows.min(cols) {
        let mut best = (0.0, 0, 0);
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, z) in row.iter().enumerate() {
                if !col_used[j] && z.norm() > best.0 {
                    best = (z.norm(), i, j);
                }
            }
        }
        if best.0 <= thresh {
            break;
        }
        let (_, pi, pj) = best;
        a.swap(r, pi);
        col_used[pj] = true;
        let piv = a[r][pj];
        let prow = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[pj] / piv;
            if f.norm() == 0.0 {
                continue;
            }
            for (x, p) in row.iter_mut().zip(&prow) {
                *x -= f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant by partial-pivot elimination.
pub fn det_complex(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].norm().total_cmp(&a[j][c].norm())).unwrap();
        if a[p][c].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c];
        det *= piv;
        let prow = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            let f = row[c] / piv;
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                *x -= f * y;
            }
        }
    }
    det
}

#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Groups of elements, each sorted, ordered by smallest member.
    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        let mut g: Vec<Vec<usize>> = by_root.into_values().collect();
        g.sort_by_key(|v| v[0]);
        g
    }
}
