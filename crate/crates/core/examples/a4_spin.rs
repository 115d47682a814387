//! The A4 spin model: unknot value and the crossing identities.
//!
//! cargo run --example a4_spin

use planar::network::{a4_crossing, a4_crossing_dual, a4_crossing_inverse, a4_evaluate, op_identity, op_mul, ShadedNetwork};

fn main() -> planar::Result<()> {
    let unknot: ShadedNetwork = serde_json::from_str(r#"{"black_regions":1,"smoothing":{"circles":["black"]}}"#).unwrap();
    println!("unknot: {}", a4_evaluate(&unknot)?);

    let (x, xi, y) = (a4_crossing(), a4_crossing_inverse(), a4_crossing_dual());
    println!("X X^-1 = 1: {}", op_mul(&x, &xi) == op_identity());
    println!("XYX = YXY: {}", op_mul(&op_mul(&x, &y), &x) == op_mul(&op_mul(&y, &x), &y));
    Ok(())
}
