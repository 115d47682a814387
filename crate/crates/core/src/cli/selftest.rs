use crate::biunitary::{components, GenHadamard};
use crate::coeff::{rat, LaurentPoly, Rational};
use crate::grouppa::{dim_pk, FiniteGroup, LabelMap};
use crate::network::{a4_crossing, a4_crossing_dual, a4_crossing_inverse, chromatic, kauffman_bracket, op_identity, op_mul, PDLink};
use crate::pathalg::{ade_admissibility, Ade};
use crate::tl::{catalan, e_element, jones_wenzl, tl_basis, TLElement, TLParams};
use crate::Result;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub struct SelfCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, r: Result<bool>) -> SelfCheck {
    match r {
        Ok(pass) => SelfCheck { name, pass, detail: String::new() },
        Err(e) => SelfCheck { name, pass: false, detail: e.to_string() },
    }
}

fn tl_relations() -> Result<bool> {
    let (d1, d2) = (rat(2, 1), rat(3, 1));
    let p = TLParams::new(d1.clone(), d2.clone())?;
    let one = rat(1, 1);
    for k in 2..=5 {
        for i in 1..k {
            let e = e_element(k, i, &one)?;
            let s = if i % 2 == 1 { &d1 } else { &d2 };
            if e.mul(&e, &p)? != e.scale(s) {
                return Ok(false);
            }
            if i + 1 < k {
                let f = e_element(k, i + 1, &one)?;
                if e.mul(&f, &p)?.mul(&e, &p)? != e {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn associativity(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = TLParams::new(rat(2, 1), rat(-1, 3))?;
    let basis = tl_basis(4);
    let one = rat(1, 1);
    for _ in 0..50 {
        let pick = |r: &mut ChaCha8Rng| TLElement::from_diagram(basis[r.gen_range(0..basis.len())].clone(), one.clone());
        let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if x.mul(&y, &p)?.mul(&z, &p)? != x.mul(&y.mul(&z, &p)?, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn jw() -> Result<bool> {
    let d = rat(3, 1);
    let p = TLParams::spherical(d.clone())?;
    for k in 1..=4 {
        let f: TLElement<Rational> = jones_wenzl(k, &d, 0.0)?;
        if f.mul(&f, &p)? != f {
            return Ok(false);
        }
        for i in 1..k {
            if !f.mul(&e_element(k, i, &rat(1, 1))?, &p)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn hadamard() -> Result<bool> {
    for q in 2..=5 {
        if components(&GenHadamard::fourier(q)?)?.count() != q {
            return Ok(false);
        }
    }
    Ok(components(&GenHadamard::paley(12)?)?.count() == 2)
}

fn a4() -> bool {
    let (x, xi, y) = (a4_crossing(), a4_crossing_inverse(), a4_crossing_dual());
    op_mul(&x, &xi) == op_identity() && op_mul(&op_mul(&x, &y), &x) == op_mul(&op_mul(&y, &x), &y)
}

fn bracket() -> Result<bool> {
    let expect = LaurentPoly::from_terms("A", &[(5, rat(-1, 1)), (-3, rat(-1, 1)), (-7, rat(1, 1))]);
    Ok(kauffman_bracket(&PDLink::trefoil(), "A")? == expect)
}

fn ade() -> Result<bool> {
    Ok(!ade_admissibility(Ade::D(5))?.admissible && ade_admissibility(Ade::E6)?.chirality == vec![1, 2])
}

fn group() -> Result<bool> {
    let t = FiniteGroup::trivial();
    for d in 1..=3usize {
        let l = LabelMap::from_images(vec![0; d], &t)?;
        for k in 0..=3 {
            if dim_pk(&t, &l, k)? != (d as u128).pow(2 * k as u32) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A fast subset of the invariant suite; `seed` drives the random triples.
pub fn run_selftest(seed: u64) -> Vec<SelfCheck> {
    vec![
        check("tl catalan dimensions", Ok((0..=7).all(|k| tl_basis(k).len() as u128 == catalan(k)))),
        check("tl generator relations", tl_relations()),
        check("tl associativity", associativity(seed)),
        check("jones-wenzl idempotent", jw()),
        check("hadamard components", hadamard()),
        check("a4 crossing relations", Ok(a4())),
        check("trefoil bracket", bracket()),
        check("triangle chromatic count", chromatic(3, &[(0, 1), (1, 2), (0, 2)], 3).map(|c| c == BigInt::from(6))),
        check("ade chirality", ade()),
        check("trivial group dimensions", group()),
    ]
}
