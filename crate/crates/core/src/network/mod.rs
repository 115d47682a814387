//! Partition functions of labelled planar networks.

mod a4;
mod knot;
mod spin;
mod vertex;

pub use a4::{a4_crossing, a4_crossing_dual, a4_crossing_inverse, a4_evaluate, a4_even_orbit, a4_weight_3box, a4_weight_3box_odd, op_identity, op_mul, A4_Q};
pub use knot::{bracket_delta, kauffman_bracket, PDLink, BRACKET_STATE_GUARD};
pub use spin::{chromatic, eval_spin_normalized, eval_spin_raw, exact_power, f_exponent, NetBox, Normalized, Shade, ShadedNetwork, SmoothingHints, SpinLabel, SPIN_STATE_GUARD};
pub use vertex::{eval_vertex, VertexBox, VertexLabel, VertexNetwork};

/// Rotation of a spin-model box by one black slot.
pub fn spin_rotate<C: crate::coeff::Coeff>(x: &SpinLabel<C>) -> SpinLabel<C> {
    x.rotate()
}
