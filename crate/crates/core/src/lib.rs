//! Exact computations over quantum complete intersections
//! `A = k<x_1, …, x_c> / (x_i^a, x_i x_j - q x_j x_i)` over prime fields:
//! modules and bimodules as matrices, tensor products, minimal resolutions,
//! rank varieties, and a reproducible check that the variety of `B ⊗_A M`
//! need not lie inside the variety of `M`.

pub mod algebra;
pub mod error;
pub mod field;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod module;
pub mod par;
pub mod suite;
pub mod variety;
pub mod verify;

pub use error::{Error, Result};
