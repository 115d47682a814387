//! Generalized Hadamard matrices as biunitaries in the spin model.

mod hadamard;
mod profile;
mod relcomm;

pub use hadamard::{Gauge, GenHadamard, ValidationReport};
pub use profile::{
    components, equivalence_fingerprint, profile, prop_21117_check, standardness_report, star_triangle_solve, ComponentReport, Fingerprint, ProfileMatrix, Prop21117Report,
    StandardnessReport, StarTriangleSolution,
};
pub use relcomm::{dim_pu_k, dim_pu_k_transfer, temperley_lieb_comparison, TlComparison, DIM_PU_GUARD, DIM_PU_TOL};
