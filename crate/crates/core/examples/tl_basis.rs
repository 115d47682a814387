//! Lists Temperley-Lieb diagrams and multiplies two of them.
//!
//! cargo run --example tl_basis

use planar::coeff::{rat, Rational};
use planar::tl::{catalan, e_element, tl_basis, TLElement, TLParams, Side};

fn main() -> planar::Result<()> {
    for k in 0..=6 {
        println!("k = {k}: {} diagrams (Catalan {})", tl_basis(k).len(), catalan(k));
    }
    for d in tl_basis(3) {
        println!("  {:?}  through strings {}", d.matching(), d.through_strings());
    }

    // Unshaded-region loops cost delta1, shaded ones delta2.
    let p = TLParams::new(rat(2, 1), rat(3, 1))?;
    let one = rat(1, 1);
    let (e1, e2) = (e_element(3, 1, &one)?, e_element(3, 2, &one)?);
    show("E1 E1", &e1.mul(&e1, &p)?);
    show("E1 E2 E1", &e1.mul(&e2, &p)?.mul(&e1, &p)?);
    let x = TLElement::identity(3, one.clone()).add(&e1.scale(&rat(-1, 2)))?;
    println!("tr(1 - E1/2) = {}", x.trace(&p, Side::Left));
    Ok(())
}

fn show(name: &str, x: &TLElement<Rational>) {
    let terms: Vec<String> = x.terms().map(|(d, c)| format!("{c} {:?}", d.matching())).collect();
    println!("{name:>9} = {}", terms.join(" + "));
}
