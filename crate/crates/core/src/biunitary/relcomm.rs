use super::hadamard::GenHadamard;
use crate::linalg::rank_complex;
use crate::tl::catalan;
use crate::{Error, Result};
use num_complex::Complex64;

/// Largest `Q^k` accepted by the relative commutant solvers.
pub const DIM_PU_GUARD: usize = 10_000;

/// Relative rank tolerance of the eigenspace computations.
pub const DIM_PU_TOL: f64 = 1e-9;

fn tuples(q: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|t| (0..q).map(move |a| [t.clone(), vec![a]].concat())).collect();
    }
    out
}

fn guard(h: &GenHadamard, k: usize) -> Result<usize> {
    match h.q().checked_pow(k as u32) {
        Some(n) if n <= DIM_PU_GUARD => Ok(n),
        _ => Err(Error::SizeGuard(format!("Q^k = {}^{k} exceeds {DIM_PU_GUARD}", h.q()))),
    }
}

/// `dim P^u_k` from the sandwich condition. Writing `P_(a,b)` for the rank
/// one projection `v_(a,b) v_(a,b)^* / Q`, a function `x` on `[Q]^k` lies in
/// `P^u_k` iff `sum_j x_j P_(i_1,j_1) ... P_(i_k,j_k) = x_i 1` for every `i`.
/// The nullity of that system is found through its normal matrix.
pub fn dim_pu_k(h: &GenHadamard, k: usize) -> Result<usize> {
    let n = guard(h, k)?;
    let q = h.q();
    if k == 0 || q == 1 {
        return Ok(1);
    }
    if (n * n).saturating_mul(q * q) > 2_000_000_000 {
        return Err(Error::SizeGuard(format!("sandwich system of {n} unknowns at Q = {q}")));
    }
    let proj = projections(h);
    let idx = tuples(q, k);
    let zero = Complex64::new(0.0, 0.0);
    let mut normal = vec![vec![zero; n]; n];
    let mut block = vec![vec![zero; q * q]; n];
    for (ii, i) in idx.iter().enumerate() {
        for (jj, j) in idx.iter().enumerate() {
            let mut m = proj[i[0] * q + j[0]].clone();
            for t in 1..k {
                m = matmul(&m, &proj[i[t] * q + j[t]], q);
            }
            if ii == jj {
                for r in 0..q {
                    m[r * q + r] -= 1.0;
                }
            }
            block[jj] = m;
        }
        for a in 0..n {
            for b in a..n {
                let s: Complex64 = block[a].iter().zip(&block[b]).map(|(x, y)| x.conj() * y).sum();
                normal[a][b] += s;
                if a != b {
                    normal[b][a] += s.conj();
                }
            }
        }
    }
    Ok(n - rank_complex(&normal, DIM_PU_TOL))
}

/// `dim P^u_k` as the multiplicity of the eigenvalue `Q` of the periodic
/// transfer matrix `K_ij = Q^-k prod_t <v_(i_t,j_t), v_(i_{t+1},j_{t+1})>`.
pub fn dim_pu_k_transfer(h: &GenHadamard, k: usize) -> Result<usize> {
    let n = guard(h, k)?;
    let q = h.q();
    if k == 0 || q == 1 {
        return Ok(1);
    }
    let vs: Vec<Vec<Complex64>> = (0..q * q).map(|p| h.v(p / q, p % q)).collect();
    let ip: Vec<Vec<Complex64>> = vs.iter().map(|a| vs.iter().map(|b| a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()).collect()).collect();
    let idx = tuples(q, k);
    let scale = (q as f64).powi(-(k as i32));
    let qc = Complex64::new(q as f64, 0.0);
    let m: Vec<Vec<Complex64>> = idx
        .iter()
        .enumerate()
        .map(|(ii, i)| {
            idx.iter()
                .enumerate()
                .map(|(jj, j)| {
                    let p: Complex64 = (0..k).map(|t| ip[i[t] * q + j[t]][i[(t + 1) % k] * q + j[(t + 1) % k]]).product();
                    p * scale - if ii == jj { qc } else { Complex64::new(0.0, 0.0) }
                })
                .collect()
        })
        .collect();
    Ok(n - rank_complex(&m, DIM_PU_TOL))
}

fn projections(h: &GenHadamard) -> Vec<Vec<Complex64>> {
    let q = h.q();
    (0..q * q)
        .map(|p| {
            let v = h.v(p / q, p % q);
            (0..q * q).map(|rc| v[rc / q] * v[rc % q].conj() / q as f64).collect()
        })
        .collect()
}

fn matmul(a: &[Complex64], b: &[Complex64], q: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); q * q];
    for r in 0..q {
        for t in 0..q {
            let x = a[r * q + t];
            if x.norm_sqr() == 0.0 {
                continue;
            }
            for c in 0..q {
                out[r * q + c] += x * b[t * q + c];
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlComparison {
    pub k: usize,
    pub dim: usize,
    pub catalan: u128,
    pub equal: bool,
}

pub fn temperley_lieb_comparison(h: &GenHadamard, k: usize) -> Result<TlComparison> {
    let dim = dim_pu_k(h, k)?;
    let c = catalan(k);
    Ok(TlComparison { k, dim, catalan: c, equal: dim as u128 == c })
}
