//! Temperley-Lieb, decorated and Fuss-Catalan diagram algebras.

mod decorated;
mod diagram;
mod element;
mod fc;
mod jw;

pub use decorated::{decorated_basis, is_start, multiply_decorated, pw_projection, DecoratedAlgebraSpec, DecoratedDiagram, DecoratedElement, Run};
pub use diagram::{catalan, tl_basis, Composition, Layer, Piece, TLDiagram};
pub use element::{closure_loops, e_element, gram_matrix, gram_rank, multiply_diagrams, Side, TLElement, TLParams};
pub use fc::{fuss_catalan_number, FussCatalan};
pub use jw::jones_wenzl;
