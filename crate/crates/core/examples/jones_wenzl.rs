//! Jones-Wenzl idempotents, exactly at a rational loop value and in floating
//! point at 2cos(pi/5), where f_5 does not exist.
//!
//! cargo run --example jones_wenzl

use num_complex::Complex64;
use planar::coeff::{chebyshev_t, rat};
use planar::tl::{jones_wenzl, Side, TLParams};

fn main() -> planar::Result<()> {
    let delta = rat(5, 2);
    let p = TLParams::spherical(delta.clone())?;
    for k in 1..=4 {
        let f = jones_wenzl(k, &delta, 0.0)?;
        let tr = f.normalized_trace(&p, Side::Left)?;
        let inv = rat(4, 25);
        println!("f_{k}: {} terms, tr = {tr}, T_(k+1)(1/delta^2) = {}", f.len(), chebyshev_t(k + 1, &inv));
    }

    let golden = Complex64::new(2.0 * (std::f64::consts::PI / 5.0).cos(), 0.0);
    for k in 1..=5 {
        match jones_wenzl(k, &golden, 1e-9) {
            Ok(f) => println!("delta = 2cos(pi/5): f_{k} has {} terms", f.len()),
            Err(e) => println!("delta = 2cos(pi/5): {e}"),
        }
    }
    Ok(())
}
