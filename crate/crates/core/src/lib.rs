//! Executable planar algebra: Temperley-Lieb and Fuss-Catalan diagram
//! algebras, planar network state sums, Hadamard biunitaries, principal
//! graph path algebras and group planar algebras.

pub mod biunitary;
pub mod cli;
pub mod coeff;
mod error;
pub mod grouppa;
pub mod linalg;
pub mod network;
pub mod pathalg;
pub mod tl;

pub use error::{Error, Result};
