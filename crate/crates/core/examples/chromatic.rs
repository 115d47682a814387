//! Proper Q-colorings via the Potts spin model.
//!
//! cargo run --example chromatic

use planar::network::chromatic;

fn main() -> planar::Result<()> {
    let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    for q in 1..=5 {
        println!("Q = {q}: K4 {}, C5 {}", chromatic(4, &k4, q)?, chromatic(5, &c5, q)?);
    }
    Ok(())
}
