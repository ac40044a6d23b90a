//! Lie algebras in a basis, their series, quotients and gradings.

pub mod algebra;
pub mod graded;
pub mod quotient;
pub mod series;

pub use algebra::{JacobiReport, LieAlgebra};
pub use graded::{GradedLieAlgebra, GradingReport};
pub use quotient::{quotient, restrict_to_ideal, split_abelian_factor, subalgebra, Quotient};
pub use series::{
    bracket_subspaces, bracket_with_algebra, center, centralizer, derived, derived_algebra, dims, ideal_generated, is_ideal,
    largest_ideal_in, lcs, nilpotency_step, ucs,
};
