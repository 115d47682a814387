//! Group planar algebra dimensions and alternating products.
//!
//! cargo run --example group_algebra

use planar::grouppa::{alt_named, dim_pk, rotate_word, FiniteGroup, LabelMap};

fn main() -> planar::Result<()> {
    let z3 = FiniteGroup::cyclic(3);
    let l = LabelMap::new(vec!["e".into(), "g".into(), "h".into()], vec![0, 1, 2], &z3)?;
    for k in 0..=4 {
        println!("Z3 with D = {{e, g, h}}: dim P_{k} = {}", dim_pk(&z3, &l, k)?);
    }
    println!("alt(g h g e) = {}", alt_named(&z3, &l, &["g", "h", "g", "e"])?);
    println!("rotation of [g, h, g, e]: {:?}", rotate_word(&["g", "h", "g", "e"])?);

    let t = FiniteGroup::trivial();
    let d = LabelMap::from_images(vec![0, 0, 0], &t)?;
    println!("trivial group, |D| = 3: dim P_2 = {}", dim_pk(&t, &d, 2)?);
    Ok(())
}
