use super::graph::{perron_trace, PrincipalGraph};
use crate::coeff::{rat, Rational};
use crate::linalg::det_complex;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// `n x n` matrix with `delta` on the diagonal, `1` beside it, `omega` in the
/// top right corner and `conj(omega)` bottom left.
pub fn delta_matrix(n: usize, delta: f64, omega: Complex64) -> Vec<Vec<Complex64>> {
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        m[i][i] = Complex64::new(delta, 0.0);
        if i + 1 < n {
            m[i][i + 1] = Complex64::new(1.0, 0.0);
            m[i + 1][i] = Complex64::new(1.0, 0.0);
        }
    }
    m[0][n - 1] += omega;
    m[n - 1][0] += omega.conj();
    m
}

/// Determinant of [`delta_matrix`] by elimination. The matrix is Hermitian so
/// only the real part is returned.
pub fn delta_matrix_det(n: usize, delta: f64, omega: Complex64) -> Result<f64> {
    if n < 3 {
        return Err(Error::Invalid(format!("n = {n} must be at least 3")));
    }
    Ok(det_complex(&delta_matrix(n, delta, omega)).re)
}

/// `P_{2n}(delta)`: determinant of the `n x n` tridiagonal matrix with
/// `delta` on the diagonal and `1` beside it.
pub fn p_even(n: usize, delta: f64) -> f64 {
    let (mut a, mut b) = (1.0, delta);
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        (a, b) = (b, delta * b - a);
    }
    b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ade {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl Ade {
    pub fn parse(family: &str, n: Option<usize>) -> Result<Self> {
        let need = || n.ok_or_else(|| Error::Usage(format!("family {family} needs --n")));
        Ok(match family.to_ascii_uppercase().as_str() {
            "A" => Ade::A(need()?),
            "D" => Ade::D(need()?),
            "E" => match need()? {
                6 => Ade::E6,
                7 => Ade::E7,
                8 => Ade::E8,
                m => return Err(Error::Invalid(format!("E_{m} is not a Coxeter graph"))),
            },
            "E6" => Ade::E6,
            "E7" => Ade::E7,
            "E8" => Ade::E8,
            f => return Err(Error::Invalid(format!("unsupported family {f}"))),
        })
    }

    pub fn graph(&self) -> Result<PrincipalGraph> {
        match *self {
            Ade::A(n) if n >= 1 => PrincipalGraph::a(n),
            Ade::A(_) => Err(Error::Invalid("A_0 is empty".into())),
            Ade::D(n) => PrincipalGraph::d(n),
            Ade::E6 => PrincipalGraph::e(6),
            Ade::E7 => PrincipalGraph::e(7),
            Ade::E8 => PrincipalGraph::e(8),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Ade::A(n) => format!("A{n}"),
            Ade::D(n) => format!("D{n}"),
            Ade::E6 => "E6".into(),
            Ade::E7 => "E7".into(),
            Ade::E8 => "E8".into(),
        }
    }
}

/// First depth holding two vertices, where the graph leaves `A_infinity`.
pub fn critical_depth(g: &PrincipalGraph) -> Option<usize> {
    g.depth_counts().iter().position(|&c| c >= 2)
}

/// `kappa` with `delta = 2 cos(pi / kappa)`.
pub fn coxeter_number(g: &PrincipalGraph) -> Result<usize> {
    let d = perron_trace(g, None)?.delta;
    if d >= 2.0 {
        return Err(Error::Invalid(format!("norm {d} is not below 2")));
    }
    let kappa = (PI / (d / 2.0).acos()).round() as usize;
    if (2.0 * (PI / kappa as f64).cos() - d).abs() > 1e-9 {
        return Err(Error::Invalid(format!("norm {d} is not 2cos(pi/kappa)")));
    }
    Ok(kappa)
}

/// Chirality candidates `omega = exp(2 pi i j / k)` at critical depth `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdeVerdict {
    pub graph: String,
    pub critical_depth: Option<usize>,
    pub coxeter: usize,
    /// Exponents `j` in `0..k`.
    pub chirality: Vec<usize>,
    pub admissible: bool,
}

impl AdeVerdict {
    pub fn chirality_values(&self) -> Vec<Complex64> {
        let k = self.critical_depth.unwrap_or(1) as f64;
        self.chirality.iter().map(|&j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k)).collect()
    }
}

/// Solves `2 cos((2k+2) pi / kappa) = omega + omega^-1` over `k`-th roots of
/// unity, exactly: `cos(a pi) = cos(b pi)` iff `a = +-b mod 2`.
pub fn ade_admissibility(family: Ade) -> Result<AdeVerdict> {
    let g = family.graph()?;
    let coxeter = coxeter_number(&g)?;
    let Some(k) = critical_depth(&g) else {
        return Ok(AdeVerdict { graph: family.name(), critical_depth: None, coxeter, chirality: vec![], admissible: true });
    };
    let lhs = rat((2 * k + 2) as i64, coxeter as i64);
    let two = rat(2, 1);
    let mod2 = |x: Rational| &x - (&x / &two).floor() * &two;
    let chirality: Vec<usize> = (0..k)
        .filter(|&j| {
            let b = rat(2 * j as i64, k as i64);
            mod2(lhs.clone() - b.clone()) == rat(0, 1) || mod2(lhs.clone() + b) == rat(0, 1)
        })
        .collect();
    Ok(AdeVerdict { graph: family.name(), critical_depth: Some(k), coxeter, admissible: !chirality.is_empty(), chirality })
}
