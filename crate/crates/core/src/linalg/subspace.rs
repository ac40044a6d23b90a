use std::fmt;

use crate::error::{Error, Result};
use crate::field::{axpy, is_zero_vec, Field};
use crate::linalg::matrix::Matrix;

/// A linear subspace of `F^n`, stored as the rows of its reduced row echelon
/// basis. Two subspaces are equal exactly when their stored forms agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        let r = m.rref();
        Ok(Subspace { ambient, basis: r.matrix, pivots: r.pivots })
    }

    /// Span of standard basis vectors (0-based indices).
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut vs = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange { index: i, dim: ambient });
            }
            vs.push(crate::field::unit_vec(ambient, i));
        }
        Self::span(ambient, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Indices that are not pivots; the corresponding unit vectors span a
    /// complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    /// Remainder of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Result<Vec<F>> {
        self.check_len(v)?;
        let mut r = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                axpy(&mut r, &c, self.basis.row(k));
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        Ok(is_zero_vec(&self.reduce(v)?))
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in
    /// the subspace.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> Result<bool> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        for v in other.vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let mut vs = self.vectors();
        vs.extend(other.vectors());
        Self::span(self.ambient, &vs)
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // u^T A = w^T B  <=>  [A^T | -B^T] (u, w) = 0
        let a = self.dim();
        let b = other.dim();
        let m = Matrix::from_fn(self.ambient, a + b, |i, j| {
            if j < a {
                self.basis[(j, i)].clone()
            } else {
                -other.basis[(j - a, i)].clone()
            }
        });
        let ker = m.kernel();
        let mut vs = Vec::new();
        for coef in ker.vectors() {
            let mut v = vec![F::zero(); self.ambient];
            for (k, c) in coef.iter().take(a).enumerate() {
                axpy(&mut v, c, self.basis.row(k));
            }
            vs.push(v);
        }
        Self::span(self.ambient, &vs)
    }

    /// Image under a linear map given as a matrix acting on column vectors.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.cols() });
        }
        let mut vs = Vec::with_capacity(self.dim());
        for v in self.vectors() {
            vs.push(m.mul_vec(&v)?);
        }
        Self::span(m.rows(), &vs)
    }

    /// Preimage `{x : Mx ∈ self}` for `M : F^k -> F^ambient`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.rows() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.rows() });
        }
        self.quotient_projection().mul(m).map(|pm| pm.kernel())
    }

    /// Matrix of the projection `F^n -> F^n / self`, expressed in the
    /// coordinates indexed by [`Subspace::non_pivots`].
    pub fn quotient_projection(&self) -> Matrix<F> {
        let free = self.non_pivots();
        let mut m = Matrix::zeros(free.len(), self.ambient);
        for c in 0..self.ambient {
            let r = self.reduce(&crate::field::unit_vec(self.ambient, c)).expect("unit vector");
            for (k, &f) in free.iter().enumerate() {
                m[(k, c)] = r[f].clone();
            }
        }
        m
    }

    /// Orthogonal complement for the symmetric form with Gram matrix `gram`.
    pub fn orthogonal(&self, gram: &Matrix<F>) -> Result<Subspace<F>> {
        if gram.rows() != self.ambient || gram.cols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: gram.rows() });
        }
        let m = self.basis.mul(gram)?;
        Ok(m.kernel())
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.vectors().iter().map(|v| crate::io::text::format_vector(v)).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}
