//! Exact linear algebra over a [`Field`](crate::field::Field).

pub mod matrix;
pub mod poly;
pub mod sparse;
pub mod spectral;
pub mod subspace;

pub use matrix::{Matrix, Rref};
pub use poly::Poly;
pub use sparse::SparseEliminator;
pub use subspace::Subspace;
