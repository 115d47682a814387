//! Triple-point link model on four spins built from the even orbit of `A_4`.

use super::spin::{eval_spin_normalized, Normalized, ShadedNetwork, SpinLabel};
use crate::coeff::{rat, Rational};
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub const A4_Q: usize = 4;

/// Parity of `1->a, 2->b, 3->c, 4->d` for distinct 0-based spins.
fn even_triple(a: usize, b: usize, c: usize) -> bool {
    let d = 6 - a - b - c;
    let p = [a, b, c, d];
    let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    inversions % 2 == 0
}

fn distinct(s: &[usize]) -> bool {
    s[0] != s[1] && s[1] != s[2] && s[0] != s[2]
}

/// Characteristic function of the even orbit.
pub fn a4_even_orbit() -> SpinLabel<Rational> {
    SpinLabel::from_fn(A4_Q, 3, &Rational::one(), |s| if distinct(s) && even_triple(s[0], s[1], s[2]) { Rational::one() } else { Rational::zero() })
}

/// The 3-box `e - 1/2 (smoothing)` as seen by spins, with the maxima and minima
/// of the smoothing absorbed: `+1` on the even orbit, `-1` when all spins agree.
pub fn a4_weight_3box() -> SpinLabel<Rational> {
    SpinLabel::from_fn(A4_Q, 3, &Rational::one(), |s| {
        if distinct(s) && even_triple(s[0], s[1], s[2]) {
            rat(1, 1)
        } else if s[0] == s[1] && s[1] == s[2] {
            rat(-1, 1)
        } else {
            rat(0, 1)
        }
    })
}

/// Same as [`a4_weight_3box`] with the odd orbit.
pub fn a4_weight_3box_odd() -> SpinLabel<Rational> {
    SpinLabel::from_fn(A4_Q, 3, &Rational::one(), |s| {
        if distinct(s) && !even_triple(s[0], s[1], s[2]) {
            rat(1, 1)
        } else if s[0] == s[1] && s[1] == s[2] {
            rat(-1, 1)
        } else {
            rat(0, 1)
        }
    })
}

/// Partition function with every box filled by [`a4_weight_3box`], times the
/// circle-count normalization from the smoothing hints.
pub fn a4_evaluate(net: &ShadedNetwork) -> Result<Rational> {
    let w = a4_weight_3box();
    let mut labels = BTreeMap::new();
    for b in &net.boxes {
        if b.regions.len() != 3 {
            return Err(Error::Invalid(format!("box {} is not a 3-box", b.label)));
        }
        labels.insert(b.label.clone(), w.clone());
    }
    if !net.boundary.is_empty() {
        return Err(Error::Invalid("A4 evaluation needs a closed network".into()));
    }
    match eval_spin_normalized(net, A4_Q, &labels)?.1 {
        Normalized::Exact(t) => Ok(t.scalar().expect("closed").clone()),
        Normalized::Float(_) => Err(Error::Invalid("normalization is not rational".into())),
    }
}

/// Two-strand crossing operators on spins `(a, b | c, d)`: `a, b` above,
/// `d, c` below, composed by [`op_mul`].
pub fn a4_crossing() -> SpinLabel<Rational> {
    let w = a4_weight_3box();
    SpinLabel::from_fn(A4_Q, 4, &Rational::one(), |s| if s[1] == s[2] { w.get(&[s[0], s[1], s[3]]).clone() } else { Rational::zero() })
}

/// Inverse crossing, built from the odd orbit.
pub fn a4_crossing_inverse() -> SpinLabel<Rational> {
    let w = a4_weight_3box_odd();
    SpinLabel::from_fn(A4_Q, 4, &Rational::one(), |s| if s[1] == s[2] { w.get(&[s[0], s[1], s[3]]).clone() } else { Rational::zero() })
}

/// The crossing acting on the other pair of adjacent regions.
pub fn a4_crossing_dual() -> SpinLabel<Rational> {
    let w = a4_weight_3box();
    SpinLabel::from_fn(A4_Q, 4, &Rational::one(), |s| if s[0] == s[3] { w.get(&[s[0], s[2], s[1]]).clone() } else { Rational::zero() })
}

pub fn op_identity() -> SpinLabel<Rational> {
    SpinLabel::from_fn(A4_Q, 4, &Rational::one(), |s| if s[0] == s[3] && s[1] == s[2] { Rational::one() } else { Rational::zero() })
}

/// `(xy)(a,b,c,d) = sum_{u,v} x(a,b,v,u) y(u,v,c,d)`.
pub fn op_mul(x: &SpinLabel<Rational>, y: &SpinLabel<Rational>) -> SpinLabel<Rational> {
    let q = x.q();
    SpinLabel::from_fn(q, 4, &Rational::one(), |s| {
        let mut acc = Rational::zero();
        for u in 0..q {
            for v in 0..q {
                let l = x.get(&[s[0], s[1], v, u]);
                if !l.is_zero() {
                    acc += l * y.get(&[u, v, s[2], s[3]]);
                }
            }
        }
        acc
    })
}
