use crate::derivations::{nikolayevsky, NikolayevskyResult};
use crate::error::Result;
use crate::free::eigenspace_bound;
use crate::lie::{bracket_subspaces, LieAlgebra};
use crate::linalg::Subspace;
use crate::Rational;

/// An eigenspace `W` of the Nikolayevsky derivation with
/// `dim [[W,W],W] > m(-4+3m+m²)/6`, `m = dim W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundViolation {
    pub eigenvalue: Rational,
    pub space: Subspace<Rational>,
    pub dim: usize,
    pub bound: usize,
}

pub fn eigenspace_bound_obstruction(g: &LieAlgebra<Rational>) -> Result<Option<BoundViolation>> {
    eigenspace_bound_obstruction_with(g, &nikolayevsky(g)?)
}

/// As [`eigenspace_bound_obstruction`] with a precomputed derivation.
pub fn eigenspace_bound_obstruction_with(
    g: &LieAlgebra<Rational>,
    nik: &NikolayevskyResult,
) -> Result<Option<BoundViolation>> {
    for e in &nik.eigen {
        let w = &e.space;
        let www = bracket_subspaces(g, &bracket_subspaces(g, w, w)?, w)?;
        let bound = eigenspace_bound(w.dim());
        if www.dim() > bound {
            return Ok(Some(BoundViolation { eigenvalue: e.value.clone(), space: w.clone(), dim: www.dim(), bound }));
        }
    }
    Ok(None)
}
