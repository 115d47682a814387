use super::element::{e_element, TLElement, TLParams};
use crate::coeff::Field;
use crate::{Error, Result};

/// Jones-Wenzl idempotent `f_k` at loop value `delta`.
///
/// Built by `f_{j+1} = f_j - r_j f_j E_j f_j` where `r_j` is read off from
/// `f_j E_j f_j E_j = c_j f_j E_j` as `r_j = 1/c_j`. A vanishing `c_j`
/// (within `tol` for float coefficients) means `f_{j+1}` does not exist.
pub fn jones_wenzl<C: Field>(k: usize, delta: &C, tol: f64) -> Result<TLElement<C>> {
    let p = TLParams::spherical(delta.clone())?;
    let one = delta.one_like();
    let mut f = TLElement::identity(k.min(1), one.clone());
    if k == 0 {
        return Ok(f);
    }
    for j in 1..k {
        f = f.include();
        let e = e_element(j + 1, j, &one)?;
        let fe = f.mul(&e, &p)?;
        let fef = fe.mul(&f, &p)?;
        let x = fef.mul(&e, &p)?;
        let (d, c0) = fe.terms().next().ok_or_else(|| Error::NotSemisimple(format!("f_{j} E_{j} vanished")))?;
        let c = x.coeff(d).cloned().unwrap_or_else(|| one.zero_like()).div(c0).expect("nonzero term");
        if c.near_zero(tol) {
            return Err(Error::NotSemisimple(format!("f_{} does not exist at this loop value", j + 1)));
        }
        debug_assert!(x.approx_eq(&fe.scale(&c), tol.max(1e-12) * 1e3));
        let r = c.inv().expect("checked nonzero");
        f = f.sub(&fef.scale(&r))?;
    }
    Ok(f)
}
