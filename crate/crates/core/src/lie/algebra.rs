use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{axpy, is_zero_vec, Field};
use crate::linalg::Matrix;

/// Lie algebra given by structure constants in a fixed basis.
///
/// Only brackets `[e_i, e_j]` with `i < j` are stored, each as a sorted list
/// of nonzero `(k, c_ij^k)`. Indices are 0-based internally and labelled
/// `e1..en` for display.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LieAlgebra<F> {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<(usize, F)>>,
}

/// Outcome of a Jacobi identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiReport<F> {
    Pass,
    Witness { i: usize, j: usize, k: usize, defect: Vec<F> },
}

impl<F> JacobiReport<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, JacobiReport::Pass)
    }
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * (2 * dim - i - 1) / 2 + (j - i - 1)
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl<F: Field> LieAlgebra<F> {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, labels: default_labels(dim), table: vec![Vec::new(); dim * dim.saturating_sub(1) / 2] }
    }

    /// Build from entries `(i, j, k, c)` meaning `c_ij^k += c`, checking the
    /// Jacobi identity.
    pub fn from_brackets(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, F)>) -> Result<Self> {
        let g = Self::from_brackets_unchecked(dim, entries)?;
        match g.jacobi_check() {
            JacobiReport::Pass => Ok(g),
            JacobiReport::Witness { i, j, k, .. } => Err(Error::Jacobi { i, j, k }),
        }
    }

    /// As [`LieAlgebra::from_brackets`] without the Jacobi check.
    pub fn from_brackets_unchecked(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, F)>,
    ) -> Result<Self> {
        let mut acc: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); dim * dim.saturating_sub(1) / 2];
        for (i, j, k, c) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(Error::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::Precondition(format!("nonzero bracket [e{0}, e{0}]", i + 1)));
            }
            let (a, b, c) = if i < j { (i, j, c) } else { (j, i, -c) };
            let e = acc[pair_index(dim, a, b)].entry(k).or_insert_with(F::zero);
            *e = e.clone() + c;
        }
        let table = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Ok(LieAlgebra { dim, labels: default_labels(dim), table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    /// `[e_i, e_j]` as sparse `(k, coefficient)` pairs.
    pub fn bracket_basis_sparse(&self, i: usize, j: usize) -> Vec<(usize, F)> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Vec::new(),
            Less => self.table[pair_index(self.dim, i, j)].clone(),
            Greater => self.table[pair_index(self.dim, j, i)].iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        for (k, c) in self.bracket_basis_sparse(i, j) {
            v[k] = c;
        }
        v
    }

    /// `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> F {
        self.bracket_basis_sparse(i, j).into_iter().find(|(kk, _)| *kk == k).map(|(_, c)| c).unwrap_or_else(F::zero)
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &[(usize, F)])> + '_ {
        (0..self.dim).flat_map(move |i| {
            (i + 1..self.dim).filter_map(move |j| {
                let t = &self.table[pair_index(self.dim, i, j)];
                (!t.is_empty()).then_some((i, j, t.as_slice()))
            })
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vec::is_empty)
    }

    fn check_vec(&self, v: &[F]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let mut out = vec![F::zero(); self.dim];
        for (i, j, t) in self.nonzero_brackets() {
            let s = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
            if s.is_zero() {
                continue;
            }
            for (k, c) in t {
                out[*k] = out[*k].clone() + s.clone() * c.clone();
            }
        }
        Ok(out)
    }

    /// `ad e_i`, with column `j` equal to `[e_i, e_j]`.
    pub fn ad_basis(&self, i: usize) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.bracket_basis_sparse(i, j) {
                m[(k, j)] = c;
            }
        }
        m
    }

    pub fn ad(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_vec(x)?;
        let mut m: Matrix<F> = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, c) in self.bracket_basis_sparse(i, j) {
                    m[(k, j)] = m[(k, j)].clone() + xi.clone() * c;
                }
            }
        }
        Ok(m)
    }

    /// `[v, e_j]` for a sparse `v`, as a dense vector.
    fn bracket_sparse_basis(&self, v: &[(usize, F)], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (l, c) in v {
            for (k, d) in self.bracket_basis_sparse(*l, j) {
                out[k] = out[k].clone() + c.clone() * d;
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> JacobiReport<F> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.bracket_basis_sparse(i, j);
                for k in j + 1..n {
                    let jk = self.bracket_basis_sparse(j, k);
                    let ki = self.bracket_basis_sparse(k, i);
                    if ij.is_empty() && jk.is_empty() && ki.is_empty() {
                        continue;
                    }
                    let mut d = self.bracket_sparse_basis(&ij, k);
                    let a = self.bracket_sparse_basis(&jk, i);
                    let b = self.bracket_sparse_basis(&ki, j);
                    axpy(&mut d, &F::one(), &a);
                    axpy(&mut d, &F::one(), &b);
                    if !is_zero_vec(&d) {
                        return JacobiReport::Witness { i, j, k, defect: d };
                    }
                }
            }
        }
        JacobiReport::Pass
    }

    /// Structure constants in the basis given by the rows of `p` (old
    /// coordinates). Fails if `p` is singular.
    pub fn change_basis(&self, p: &Matrix<F>) -> Result<Self> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.rows() });
        }
        let pt_inv = p.transpose().inverse()?;
        let rows = p.row_vecs();
        let mut entries = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                let v = self.bracket(&rows[a], &rows[b])?;
                if is_zero_vec(&v) {
                    continue;
                }
                let c = pt_inv.mul_vec(&v)?;
                for (k, x) in c.into_iter().enumerate() {
                    if !x.is_zero() {
                        entries.push((a, b, k, x));
                    }
                }
            }
        }
        Self::from_brackets_unchecked(self.dim, entries)
    }

    /// Direct sum with `other`, whose basis follows this one.
    pub fn direct_sum(&self, other: &LieAlgebra<F>) -> Self {
        let off = self.dim;
        let mut entries = Vec::new();
        for (i, j, t) in self.nonzero_brackets() {
            for (k, c) in t {
                entries.push((i, j, *k, c.clone()));
            }
        }
        for (i, j, t) in other.nonzero_brackets() {
            for (k, c) in t {
                entries.push((i + off, j + off, k + off, c.clone()));
            }
        }
        Self::from_brackets_unchecked(self.dim + other.dim, entries).expect("indices in range")
    }

    /// Compare structure constants, ignoring labels.
    pub fn same_structure(&self, other: &LieAlgebra<F>) -> bool {
        self.dim == other.dim && self.table == other.table
    }

    /// All structure constants as `(i, j, k, c)` with `i < j`.
    pub fn entries(&self) -> Vec<(usize, usize, usize, F)> {
        self.nonzero_brackets()
            .flat_map(|(i, j, t)| t.iter().map(move |(k, c)| (i, j, *k, c.clone())))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn heisenberg() -> LieAlgebra<Rational> {
        LieAlgebra::from_brackets(3, [(0, 1, 2, q(1))]).unwrap()
    }

    #[test]
    fn antisymmetric_storage() {
        let h = heisenberg();
        assert_eq!(h.bracket_basis(1, 0), vec![q(0), q(0), q(-1)]);
        assert_eq!(h.constant(0, 1, 2), q(1));
        let x = vec![q(1), q(2), q(3)];
        assert!(is_zero_vec(&h.bracket(&x, &x).unwrap()));
    }

    #[test]
    fn jacobi_failure_detected() {
        // [e1,e2]=e3, [e1,e3]=e4, [e2,e4]=e1 breaks Jacobi on (e1,e2,e3)
        let g = LieAlgebra::from_brackets_unchecked(4, [(0, 1, 2, q(1)), (0, 2, 3, q(1)), (1, 3, 0, q(1))]).unwrap();
        assert!(!g.jacobi_check().is_pass());
        assert!(LieAlgebra::from_brackets(4, g.entries()).is_err());
    }

    #[test]
    fn change_basis_roundtrip() {
        let h = heisenberg();
        let p = Matrix::from_rows(3, &[vec![q(1), q(1), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(2)]]).unwrap();
        let h2 = h.change_basis(&p).unwrap();
        // [f1, f2] = [e1+e2, e2] = e3 = f3 / 2
        assert_eq!(h2.bracket_basis(0, 1), vec![q(0), q(0), Rational::new(1.into(), 2.into())]);
        let back = h2.change_basis(&p.inverse().unwrap()).unwrap();
        assert!(back.same_structure(&h));
    }
}
