use crate::coeff::{Coeff, CyclotomicInt, DEFAULT_TOL};
use crate::{Error, Result};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::f64::consts::PI;

#[derive(Clone, Debug, PartialEq)]
enum Entries {
    /// `entry[x][a] = zeta_order^exp[x][a]`
    Root { order: u32, exp: Vec<Vec<u32>> },
    Complex { entries: Vec<Vec<Complex64>>, tol: f64 },
}

/// `Q x Q` matrix with unit-modulus entries; the biunitary is `entries / sqrt(Q)`.
/// Rows are indexed by the summation spin `x`, so `u^x_a = entries[x][a]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenHadamard {
    q: usize,
    entries: Entries,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub q: usize,
    pub mode: &'static str,
    /// Zero-test tolerance, `None` when exact.
    pub tol: Option<f64>,
}

/// Row and column phases followed by permutations:
/// `new[x][a] = row[x] * col[a] * old[row_perm[x]][col_perm[a]]`.
#[derive(Clone, Debug, PartialEq)]
pub enum Gauge {
    Root { order: u32, row: Vec<u32>, col: Vec<u32>, row_perm: Vec<usize>, col_perm: Vec<usize> },
    Complex { row: Vec<Complex64>, col: Vec<Complex64>, row_perm: Vec<usize>, col_perm: Vec<usize> },
}

impl Gauge {
    pub fn identity(q: usize) -> Self {
        Gauge::Root { order: 1, row: vec![0; q], col: vec![0; q], row_perm: (0..q).collect(), col_perm: (0..q).collect() }
    }

    fn perms(&self) -> (&[usize], &[usize]) {
        match self {
            Gauge::Root { row_perm, col_perm, .. } | Gauge::Complex { row_perm, col_perm, .. } => (row_perm, col_perm),
        }
    }
}

fn root_c(order: u32, e: u32) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / order as f64)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_perm(p: &[usize], q: usize) -> bool {
    let mut seen = vec![false; q];
    p.len() == q && p.iter().all(|&i| i < q && !std::mem::replace(&mut seen[i], true))
}

impl GenHadamard {
    pub fn from_root(order: u32, exp: Vec<Vec<u32>>) -> Result<Self> {
        let q = exp.len();
        if order == 0 || q == 0 || exp.iter().any(|r| r.len() != q) {
            return Err(Error::Invalid("root-mode matrix must be square with positive order".into()));
        }
        let exp = exp.into_iter().map(|r| r.into_iter().map(|e| e % order).collect()).collect();
        Ok(GenHadamard { q, entries: Entries::Root { order, exp } })
    }

    pub fn from_complex(entries: Vec<Vec<Complex64>>, tol: f64) -> Result<Self> {
        let q = entries.len();
        if q == 0 || entries.iter().any(|r| r.len() != q) {
            return Err(Error::Invalid("matrix must be square".into()));
        }
        Ok(GenHadamard { q, entries: Entries::Complex { entries, tol } })
    }

    /// Character table of `Z/Q`: `zeta_Q^(xa)`.
    pub fn fourier(q: usize) -> Result<Self> {
        Self::from_root(q as u32, (0..q).map(|x| (0..q).map(|a| ((x * a) % q) as u32).collect()).collect())
    }

    /// `2^n x 2^n` Sylvester matrix, the character table of `(Z/2)^n`.
    pub fn sylvester(n: u32) -> Result<Self> {
        let q = 1usize << n;
        Self::from_root(2, (0..q).map(|x| (0..q).map(|a| (x & a).count_ones() % 2).collect()).collect())
    }

    /// Paley matrix of size `q` from quadratic residues mod `p = q - 1`,
    /// `p` a prime congruent to 3 mod 4.
    pub fn paley(q: usize) -> Result<Self> {
        let p = q.wrapping_sub(1);
        if q < 4 || !is_prime(p) || p % 4 != 3 {
            return Err(Error::Invalid(format!("Paley construction needs q - 1 prime and 3 mod 4, got q = {q}")));
        }
        let mut residue = vec![false; p];
        for x in 1..p {
            residue[x * x % p] = true;
        }
        let chi = |x: usize| -> i32 {
            if x == 0 {
                0
            } else if residue[x] {
                1
            } else {
                -1
            }
        };
        let exp = (0..q)
            .map(|x| {
                (0..q)
                    .map(|a| {
                        let v = match (x, a) {
                            (0, _) => 1,
                            (_, 0) => -1,
                            _ => i32::from(x == a) + chi((a + p - x) % p),
                        };
                        u32::from(v < 0)
                    })
                    .collect()
            })
            .collect();
        Self::from_root(2, exp)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn mode(&self) -> &'static str {
        match self.entries {
            Entries::Root { .. } => "root",
            Entries::Complex { .. } => "complex",
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.entries, Entries::Root { .. })
    }

    pub fn tol(&self) -> Option<f64> {
        match self.entries {
            Entries::Root { .. } => None,
            Entries::Complex { tol, .. } => Some(tol),
        }
    }

    /// `(order, exponents)` in root mode.
    pub fn root_data(&self) -> Option<(u32, &[Vec<u32>])> {
        match &self.entries {
            Entries::Root { order, exp } => Some((*order, exp)),
            Entries::Complex { .. } => None,
        }
    }

    pub fn entry(&self, x: usize, a: usize) -> Complex64 {
        match &self.entries {
            Entries::Root { order, exp } => root_c(*order, exp[x][a]),
            Entries::Complex { entries, .. } => entries[x][a],
        }
    }

    pub fn to_complex_rows(&self) -> Vec<Vec<Complex64>> {
        (0..self.q).map(|x| (0..self.q).map(|a| self.entry(x, a)).collect()).collect()
    }

    /// `v_(a,b)` with components `u^x_a conj(u^x_b)`.
    pub fn v(&self, a: usize, b: usize) -> Vec<Complex64> {
        (0..self.q).map(|x| self.entry(x, a) * self.entry(x, b).conj()).collect()
    }

    /// Checks unit modulus and `sum_x u^x_a conj(u^x_b) = Q [a = b]`.
    pub fn validate(&self) -> Result<ValidationReport> {
        let q = self.q;
        match &self.entries {
            Entries::Root { order, exp } => {
                for a in 0..q {
                    for b in a + 1..q {
                        let mut counts = vec![0i64; *order as usize];
                        for row in exp {
                            counts[((row[a] + order - row[b]) % order) as usize] += 1;
                        }
                        if !CyclotomicInt::from_exponent_counts(&counts, *order).is_zero() {
                            return Err(Error::NotHadamard(format!("columns {a} and {b} are not orthogonal")));
                        }
                    }
                }
            }
            Entries::Complex { entries, tol } => {
                for (x, row) in entries.iter().enumerate() {
                    for (a, z) in row.iter().enumerate() {
                        if (z.norm() - 1.0).abs() > *tol {
                            return Err(Error::NotHadamard(format!("entry ({x},{a}) has modulus {}", z.norm())));
                        }
                    }
                }
                for a in 0..q {
                    for b in a + 1..q {
                        let s: Complex64 = entries.iter().map(|r| r[a] * r[b].conj()).sum();
                        if s.norm() > tol * q as f64 {
                            return Err(Error::NotHadamard(format!("columns {a} and {b} are not orthogonal")));
                        }
                    }
                }
            }
        }
        Ok(ValidationReport { q, mode: self.mode(), tol: self.tol() })
    }

    pub fn gauge(&self, g: &Gauge) -> Result<Self> {
        let q = self.q;
        let (rp, cp) = g.perms();
        if !is_perm(rp, q) || !is_perm(cp, q) {
            return Err(Error::Invalid("gauge permutations must be permutations of 0..Q".into()));
        }
        match (&self.entries, g) {
            (Entries::Root { order, exp }, Gauge::Root { order: go, row, col, .. }) => {
                if row.len() != q || col.len() != q || *go == 0 {
                    return Err(Error::Invalid("gauge phase vectors must have length Q".into()));
                }
                let m = order / gcd(*order, *go) * go;
                let (s, t) = (m / order, m / go);
                let exp = (0..q).map(|x| (0..q).map(|a| (exp[rp[x]][cp[a]] * s + (row[x] + col[a]) * t) % m).collect()).collect();
                Self::from_root(m, exp).map(|h| h.reduced())
            }
            _ => {
                let (row, col): (Vec<Complex64>, Vec<Complex64>) = match g {
                    Gauge::Root { order, row, col, .. } => (row.iter().map(|&e| root_c(*order, e)).collect(), col.iter().map(|&e| root_c(*order, e)).collect()),
                    Gauge::Complex { row, col, .. } => (row.clone(), col.clone()),
                };
                if row.len() != q || col.len() != q {
                    return Err(Error::Invalid("gauge phase vectors must have length Q".into()));
                }
                let tol = self.tol().unwrap_or(DEFAULT_TOL);
                if let Some(z) = row.iter().chain(&col).find(|z| (z.norm() - 1.0).abs() > tol) {
                    return Err(Error::Invalid(format!("gauge phase {z} is not of unit modulus")));
                }
                let entries = (0..q).map(|x| (0..q).map(|a| row[x] * col[a] * self.entry(rp[x], cp[a])).collect()).collect();
                Self::from_complex(entries, tol)
            }
        }
    }

    /// Divides out common factors of the exponents and the order.
    fn reduced(self) -> Self {
        match self.entries {
            Entries::Root { order, exp } => {
                let g = exp.iter().flatten().fold(order, |g, &e| gcd(g, e));
                let exp = exp.into_iter().map(|r| r.into_iter().map(|e| e / g).collect()).collect();
                GenHadamard { q: self.q, entries: Entries::Root { order: order / g, exp } }
            }
            e => GenHadamard { q: self.q, entries: e },
        }
    }

    /// Gauge so that row 0 and column 0 are all ones.
    pub fn dephase(&self) -> Self {
        let q = self.q;
        match &self.entries {
            Entries::Root { order, exp } => {
                let o = *order;
                let e = (0..q).map(|x| (0..q).map(|a| (exp[x][a] + 2 * o - exp[x][0] - exp[0][a] + exp[0][0]) % o).collect()).collect();
                GenHadamard { q, entries: Entries::Root { order: o, exp: e } }.reduced()
            }
            Entries::Complex { entries, tol } => {
                let e = (0..q).map(|x| (0..q).map(|a| entries[x][a] * (entries[x][0] * entries[0][a]).conj() * entries[0][0]).collect()).collect();
                GenHadamard { q, entries: Entries::Complex { entries: e, tol: *tol } }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.entries {
            Entries::Root { order, exp } => json!({"q": self.q, "mode": "root", "order": order, "exponents": exp}),
            Entries::Complex { entries, tol } => json!({
                "q": self.q,
                "mode": "complex",
                "tol": tol,
                "entries": entries.iter().map(|r| r.iter().map(|z| vec![z.re, z.im]).collect::<Vec<_>>()).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("Hadamard matrix: {m}"));
        let mode = v.get("mode").and_then(Value::as_str).unwrap_or("root");
        let h = match mode {
            "root" => {
                let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| bad("missing order"))? as u32;
                let exp: Vec<Vec<u32>> = serde_json::from_value(v.get("exponents").cloned().ok_or_else(|| bad("missing exponents"))?).map_err(|e| bad(&e.to_string()))?;
                Self::from_root(order, exp)?
            }
            "complex" => {
                let raw: Vec<Vec<[f64; 2]>> = serde_json::from_value(v.get("entries").cloned().ok_or_else(|| bad("missing entries"))?).map_err(|e| bad(&e.to_string()))?;
                let tol = v.get("tol").and_then(Value::as_f64).unwrap_or(DEFAULT_TOL);
                Self::from_complex(raw.into_iter().map(|r| r.into_iter().map(|[re, im]| Complex64::new(re, im)).collect()).collect(), tol)?
            }
            m => return Err(bad(&format!("unknown mode {m}"))),
        };
        if let Some(q) = v.get("q").and_then(Value::as_u64) {
            if q as usize != h.q {
                return Err(bad(&format!("q = {q} but matrix is {0}x{0}", h.q)));
            }
        }
        Ok(h)
    }
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
