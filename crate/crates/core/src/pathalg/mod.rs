//! Principal graphs, walk algebras, trace vectors and the ADE obstruction.

mod annular;
mod graph;
mod tree;

pub use annular::{ade_admissibility, coxeter_number, critical_depth, delta_matrix, delta_matrix_det, p_even, Ade, AdeVerdict};
pub use graph::{perron_trace, walk_basis, walk_multiply, PrincipalGraph, TraceVector, Walk, WALK_GUARD};
pub use tree::{build_tree, runs, tree_level_sizes, word_trace, TreeSpec, TreeSymbol, TREE_GUARD};
