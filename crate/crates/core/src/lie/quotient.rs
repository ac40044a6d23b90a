use crate::error::{Error, Result};
use crate::field::{unit_vec, Field};
use crate::lie::algebra::LieAlgebra;
use crate::lie::series::{center, derived_algebra, is_ideal};
use crate::linalg::{Matrix, Subspace};

/// Quotient `g / I` in the basis given by the images of the unit vectors at
/// the non-pivot positions of `I`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: LieAlgebra<F>,
    /// `(dim g - dim I) x dim g` matrix of the projection.
    pub projection: Matrix<F>,
    /// Indices of the basis vectors of `g` that represent the quotient basis.
    pub representatives: Vec<usize>,
}

pub fn quotient<F: Field>(g: &LieAlgebra<F>, ideal: &Subspace<F>) -> Result<Quotient<F>> {
    if !is_ideal(g, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let reps = ideal.non_pivots();
    let proj = ideal.quotient_projection();
    let mut entries = Vec::new();
    for (a, &i) in reps.iter().enumerate() {
        for (b, &j) in reps.iter().enumerate().skip(a + 1) {
            let v = proj.mul_vec(&g.bracket_basis(i, j))?;
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((a, b, k, c));
                }
            }
        }
    }
    let algebra = LieAlgebra::from_brackets_unchecked(reps.len(), entries)?;
    Ok(Quotient { algebra, projection: proj, representatives: reps })
}

/// Split `g = I ⊕ A` with `A` central, `A ∩ g' = 0` and `g' ⊆ I`.
pub fn split_abelian_factor<F: Field>(g: &LieAlgebra<F>) -> (Subspace<F>, Subspace<F>) {
    let n = g.dim();
    let z = center(g);
    let d = derived_algebra(g);
    let zd = z.intersect(&d).expect("same ambient");
    let mut acc = zd;
    let mut abelian = Vec::new();
    for v in z.vectors() {
        if !acc.contains(&v).expect("ambient") {
            acc = acc.sum(&Subspace::span(n, std::slice::from_ref(&v)).expect("ambient")).expect("ambient");
            abelian.push(v);
        }
    }
    let a = Subspace::span(n, &abelian).expect("ambient");
    let mut ideal = d;
    let mut total = ideal.sum(&a).expect("ambient");
    for i in 0..n {
        let e = unit_vec(n, i);
        if !total.contains(&e).expect("ambient") {
            let s = Subspace::span(n, &[e]).expect("ambient");
            ideal = ideal.sum(&s).expect("ambient");
            total = total.sum(&s).expect("ambient");
        }
    }
    (ideal, a)
}

/// The Lie algebra induced on an ideal, in its echelon basis.
pub fn restrict_to_ideal<F: Field>(g: &LieAlgebra<F>, ideal: &Subspace<F>) -> Result<LieAlgebra<F>> {
    if !is_ideal(g, ideal)? {
        return Err(Error::NotAnIdeal);
    }
    subalgebra(g, ideal)
}

/// The Lie algebra induced on a subalgebra, in its echelon basis.
pub fn subalgebra<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<LieAlgebra<F>> {
    let vs = s.vectors();
    let mut entries = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            let v = g.bracket(&vs[a], &vs[b])?;
            let c = s
                .coordinates(&v)?
                .ok_or_else(|| Error::Precondition("subspace is not closed under the bracket".into()))?;
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    entries.push((a, b, k, x));
                }
            }
        }
    }
    LieAlgebra::from_brackets_unchecked(vs.len(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::series::{bracket_subspaces, center};
    use crate::Rational;

    #[test]
    fn quotient_by_center_of_filiform() {
        let one = Rational::from_i64(1);
        let g = LieAlgebra::from_brackets(4, [(0, 1, 2, one.clone()), (0, 2, 3, one)]).unwrap();
        let q = quotient(&g, &center(&g)).unwrap();
        assert_eq!(q.algebra.dim(), 3);
        assert_eq!(q.representatives, vec![0, 1, 2]);
        assert_eq!(q.algebra.entries().len(), 1);
        assert!(quotient(&g, &Subspace::coordinate(4, &[1]).unwrap()).is_err());
        let all = quotient(&g, &Subspace::full(4)).unwrap();
        assert_eq!(all.algebra.dim(), 0);
    }

    #[test]
    fn abelian_factor_of_heisenberg_plus_line() {
        let one = Rational::from_i64(1);
        let g = LieAlgebra::from_brackets(4, [(0, 1, 2, one)]).unwrap();
        let (i, a) = split_abelian_factor(&g);
        assert_eq!(a.dim(), 1);
        assert_eq!(i.dim(), 3);
        assert!(bracket_subspaces(&g, &a, &Subspace::full(4)).unwrap().is_zero());
    }
}
