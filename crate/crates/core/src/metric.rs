//! Symmetric bilinear forms on Lie algebras.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::{center, derived_algebra, LieAlgebra};
use crate::linalg::poly::real_rooted_sign_counts;
use crate::linalg::spectral::characteristic_polynomial;
use crate::linalg::{Matrix, Subspace};
use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearForm<F> {
    gram: Matrix<F>,
    nondegenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvarianceReport<F> {
    Pass,
    /// `B([e_i,e_j],e_k) + B(e_j,[e_i,e_k]) = defect ≠ 0`.
    Witness { i: usize, j: usize, k: usize, defect: F },
}

impl<F> InvarianceReport<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, InvarianceReport::Pass)
    }
}

impl<F: Field> BilinearForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::Precondition("Gram matrix must be square".into()));
        }
        if gram != gram.transpose() {
            return Err(Error::NotSymmetric);
        }
        let nondegenerate = !gram.determinant()?.is_zero();
        Ok(BilinearForm { gram, nondegenerate })
    }

    /// Form from terms `(i, j, c)`: off-diagonal terms set both `(i,j)` and
    /// `(j,i)` to `c`, diagonal terms set `(i,i)` to `c`. Later terms for the
    /// same slot add up.
    pub fn from_terms(dim: usize, terms: &[(usize, usize, F)]) -> Result<Self> {
        let mut g: Matrix<F> = Matrix::zeros(dim, dim);
        for (i, j, c) in terms {
            if *i >= dim || *j >= dim {
                return Err(Error::IndexOutOfRange { index: (*i).max(*j), dim });
            }
            g[(*i, *j)] = g[(*i, *j)].clone() + c.clone();
            if i != j {
                g[(*j, *i)] = g[(*j, *i)].clone() + c.clone();
            }
        }
        Self::new(g)
    }

    /// Terms `(i, j, c)` with `i <= j`, inverse to [`BilinearForm::from_terms`].
    pub fn terms(&self) -> Vec<(usize, usize, F)> {
        self.gram.entries().filter(|(i, j, _)| i <= j).map(|(i, j, c)| (i, j, c.clone())).collect()
    }

    /// Neutral form on `R^{2n}` pairing `v_i` (first half) with `w_i`.
    pub fn neutral(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            g[(i, n + i)] = F::one();
            g[(n + i, i)] = F::one();
        }
        BilinearForm { gram: g, nondegenerate: true }
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.nondegenerate {
            Ok(())
        } else {
            Err(Error::DegenerateForm)
        }
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> Result<F> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::DimensionMismatch { expected: gy.len(), found: x.len() });
        }
        Ok(x.iter().zip(&gy).fold(F::zero(), |s, (a, b)| s + a.clone() * b.clone()))
    }

    pub fn is_ad_invariant(&self, g: &LieAlgebra<F>) -> Result<InvarianceReport<F>> {
        if g.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: g.dim(), found: self.dim() });
        }
        for i in 0..g.dim() {
            let ad = g.ad_basis(i);
            // entry (j,k) of ad^T G + G ad is B([e_i,e_j],e_k) + B(e_j,[e_i,e_k])
            let m = ad.transpose().mul(&self.gram)?.add(&self.gram.mul(&ad)?)?;
            let first = m.entries().next().map(|(j, k, d)| (j, k, d.clone()));
            if let Some((j, k, defect)) = first {
                return Ok(InvarianceReport::Witness { i, j, k, defect });
            }
        }
        Ok(InvarianceReport::Pass)
    }

    pub fn orth_complement(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        self.require_nondegenerate()?;
        s.orthogonal(&self.gram)
    }

    pub fn is_nondegenerate_on(&self, s: &Subspace<F>) -> Result<bool> {
        let a = s.basis();
        let r = a.mul(&self.gram)?.mul(&a.transpose())?;
        Ok(!r.determinant()?.is_zero())
    }

    /// `S*` with `B(Sx, y) = B(x, S*y)`.
    pub fn metric_adjoint(&self, s: &Matrix<F>) -> Result<Matrix<F>> {
        self.require_nondegenerate()?;
        self.gram.inverse()?.mul(&s.transpose())?.mul(&self.gram)
    }

    pub fn is_skew(&self, d: &Matrix<F>) -> Result<bool> {
        Ok(d.transpose().mul(&self.gram)?.add(&self.gram.mul(d)?)?.is_zero())
    }

    /// Orthogonal direct sum, with `other`'s basis after this one.
    pub fn direct_sum(&self, other: &BilinearForm<F>) -> Self {
        BilinearForm { gram: self.gram.block_diag(&other.gram), nondegenerate: self.nondegenerate && other.nondegenerate }
    }

    /// The form in the basis given by the rows of `p`.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        Self::new(p.mul(&self.gram)?.mul(&p.transpose())?)
    }
}

impl BilinearForm<Rational> {
    /// `(positive, negative, zero)` inertia counts over the reals.
    pub fn signature(&self) -> (usize, usize, usize) {
        let chi = characteristic_polynomial(&self.gram).expect("square");
        real_rooted_sign_counts(&chi)
    }
}

/// A Lie algebra with a nondegenerate ad-invariant metric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricLieAlgebra<F> {
    pub algebra: LieAlgebra<F>,
    pub metric: BilinearForm<F>,
}

impl<F: Field> MetricLieAlgebra<F> {
    pub fn new(algebra: LieAlgebra<F>, metric: BilinearForm<F>) -> Result<Self> {
        if !metric.is_nondegenerate() {
            return Err(Error::DegenerateForm);
        }
        if !metric.is_ad_invariant(&algebra)?.is_pass() {
            return Err(Error::NotAdInvariant);
        }
        Ok(MetricLieAlgebra { algebra, metric })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &MetricLieAlgebra<F>) -> Self {
        MetricLieAlgebra {
            algebra: self.algebra.direct_sum(&other.algebra),
            metric: self.metric.direct_sum(&other.metric),
        }
    }

    /// Abelian `R^{2n}` with the neutral metric.
    pub fn neutral_abelian(n: usize) -> Self {
        MetricLieAlgebra { algebra: LieAlgebra::abelian(2 * n), metric: BilinearForm::neutral(n) }
    }

    /// `z(g) = (g')^⊥`.
    pub fn center_is_perp_of_derived(&self) -> Result<bool> {
        let perp = self.metric.orth_complement(&derived_algebra(&self.algebra))?;
        Ok(perp == center(&self.algebra))
    }
}
