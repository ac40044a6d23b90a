//! Exact-arithmetic workbench for nilpotent Lie algebras with ad-invariant
//! metrics.
//!
//! The linear algebra and Lie algebra layers are generic over an exact
//! [`Field`]; everything that extracts eigenvalues works over [`Rational`].

pub mod catalog;
pub mod constructions;
pub mod derivations;
pub mod error;
pub mod field;
pub mod free;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod nice;
pub mod report;

pub use error::{Error, Result};
pub use field::Field;

/// Arbitrary-precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub type QMatrix = linalg::Matrix<Rational>;
pub type QSubspace = linalg::Subspace<Rational>;
pub type QLieAlgebra = lie::LieAlgebra<Rational>;
pub type QGraded = lie::GradedLieAlgebra<Rational>;
pub type QForm = metric::BilinearForm<Rational>;
pub type QMetricLie = metric::MetricLieAlgebra<Rational>;
pub type QPoly = linalg::Poly<Rational>;
pub type QVector = Vec<Rational>;

/// `n/d` as a [`Rational`].
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
