//! Kauffman brackets of a few PD codes and closed braids.
//!
//! cargo run --example knot_bracket

use planar::network::{kauffman_bracket, PDLink};

fn main() -> planar::Result<()> {
    for (name, link) in [("unknot", PDLink::unknot()), ("hopf", PDLink::hopf()), ("trefoil", PDLink::trefoil())] {
        println!("<{name}> = {}", kauffman_bracket(&link, "A")?);
    }
    // sigma1^3 closes to a trefoil, sigma1 sigma2^-1 on three strands to an unknot.
    for word in [vec![1i32, 1, 1], vec![1, -2], vec![1, -2, 1, -2]] {
        let link = PDLink::from_braid(3, &word)?;
        println!("closure of {word:?}: {}", kauffman_bracket(&link, "A")?);
    }
    Ok(())
}
