//! Derivations, inner derivations and the Nikolayevsky derivation.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{is_zero_vec, Field};
use crate::lie::LieAlgebra;
use crate::linalg::spectral::{rational_eigen, semisimple_part, Eigen};
use crate::linalg::{Matrix, SparseEliminator};
use crate::Rational;

/// Sparse derivation as `(row, col, value)` triples.
type SparseEndo<F> = Vec<(usize, usize, F)>;

fn to_dense<F: Field>(n: usize, s: &SparseEndo<F>) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    for (r, c, x) in s {
        m[(*r, *c)] = x.clone();
    }
    m
}

fn to_sparse<F: Field>(m: &Matrix<F>) -> SparseEndo<F> {
    m.entries().map(|(r, c, x)| (r, c, x.clone())).collect()
}

/// `by_right[j][k]` lists `(l, c)` with `[e_l, e_j]` having `e_k`-coefficient `c`.
fn right_table<F: Field>(g: &LieAlgebra<F>) -> Vec<Vec<Vec<(usize, F)>>> {
    let n = g.dim();
    let mut t = vec![vec![Vec::new(); n]; n];
    for (i, j, terms) in g.nonzero_brackets() {
        for (k, c) in terms {
            t[j][*k].push((i, c.clone()));
            t[i][*k].push((j, -c.clone()));
        }
    }
    t
}

fn derivation_basis_sparse<F: Field>(g: &LieAlgebra<F>) -> Vec<SparseEndo<F>> {
    let n = g.dim();
    let var = |r: usize, c: usize| r * n + c;
    let by_right = right_table(g);
    let mut el = SparseEliminator::new(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let ij = g.bracket_basis_sparse(i, j);
            #[allow(clippy::needless_range_loop)]
            for k in 0..n {
                // D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j], component k
                let mut row: Vec<(usize, F)> = Vec::new();
                for (l, c) in &ij {
                    row.push((var(k, *l), c.clone()));
                }
                for (l, c) in &by_right[j][k] {
                    row.push((var(*l, i), -c.clone()));
                }
                for (l, c) in &by_right[i][k] {
                    row.push((var(*l, j), c.clone()));
                }
                if !row.is_empty() {
                    el.push(row);
                }
            }
        }
    }
    el.kernel()
        .into_iter()
        .map(|v| v.into_iter().map(|(idx, x)| (idx / n, idx % n, x)).collect())
        .collect()
}

/// Basis of the derivation algebra.
pub fn derivation_space<F: Field>(g: &LieAlgebra<F>) -> Vec<Matrix<F>> {
    let n = g.dim();
    derivation_basis_sparse(g).iter().map(|s| to_dense(n, s)).collect()
}

pub fn is_derivation<F: Field>(g: &LieAlgebra<F>, d: &Matrix<F>) -> Result<bool> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.rows() });
    }
    let cols = d.column_vecs();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = d.mul_vec(&g.bracket_basis(i, j))?;
            let a = g.bracket(&cols[i], &crate::field::unit_vec(n, j))?;
            let b = g.bracket(&crate::field::unit_vec(n, i), &cols[j])?;
            let defect = crate::field::sub_vec(&crate::field::sub_vec(&lhs, &a), &b);
            if !is_zero_vec(&defect) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether a derivation lies in the span of the `ad e_i`.
pub fn is_inner<F: Field>(g: &LieAlgebra<F>, d: &Matrix<F>) -> Result<bool> {
    if !is_derivation(g, d)? {
        return Err(Error::NotADerivation);
    }
    Ok(inner_preimage(g, d)?.is_some())
}

/// Some `x` with `ad x = D`, if one exists.
pub fn inner_preimage<F: Field>(g: &LieAlgebra<F>, d: &Matrix<F>) -> Result<Option<Vec<F>>> {
    let n = g.dim();
    let cols: Vec<Vec<F>> = (0..n).map(|i| g.ad_basis(i).to_vec()).collect();
    let m = Matrix::from_columns(n * n, &cols)?;
    m.solve(&d.to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceReport<F> {
    Pass,
    /// Basis derivation violating `Tr(N D) = Tr(D)`.
    Witness(Matrix<F>),
}

impl<F> TraceReport<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, TraceReport::Pass)
    }
}

/// Check `Tr(N D) = Tr(D)` for every `D` in a basis of `Der(g)`.
pub fn trace_identity_check<F: Field>(g: &LieAlgebra<F>, n: &Matrix<F>) -> Result<TraceReport<F>> {
    if !is_derivation(g, n)? {
        return Err(Error::NotADerivation);
    }
    Ok(trace_check_against(n, &derivation_basis_sparse(g)))
}

fn trace_check_against<F: Field>(n: &Matrix<F>, basis: &[SparseEndo<F>]) -> TraceReport<F> {
    for d in basis {
        let tnd = d.iter().fold(F::zero(), |s, (r, c, x)| s + n[(*c, *r)].clone() * x.clone());
        let td = d.iter().filter(|(r, c, _)| r == c).fold(F::zero(), |s, (_, _, x)| s + x.clone());
        if tnd != td {
            return TraceReport::Witness(to_dense(n.rows(), d));
        }
    }
    TraceReport::Pass
}

/// Eigenvalue multiset of a diagonalizable endomorphism, increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum(pub Vec<(Rational, usize)>);

impl Spectrum {
    pub fn from_values(values: &[Rational]) -> Self {
        let mut v = values.to_vec();
        v.sort();
        let mut out: Vec<(Rational, usize)> = Vec::new();
        for x in v {
            match out.last_mut() {
                Some((y, m)) if *y == x => *m += 1,
                _ => out.push((x, 1)),
            }
        }
        Spectrum(out)
    }

    /// `scale * {ints}` with the ints listed in the given order.
    pub fn scaled(scale: &Rational, ints: &[i64]) -> Self {
        let vals: Vec<Rational> = ints.iter().map(|&k| scale.clone() * Rational::from_i64(k)).collect();
        Self::from_values(&vals)
    }

    pub fn values(&self) -> Vec<Rational> {
        self.0.iter().flat_map(|(x, m)| std::iter::repeat_n(x.clone(), *m)).collect()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|(_, m)| m).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|(x, _)| x.is_zero())
    }

    /// Positive `s` and coprime integers `k_i` with eigenvalues `s * k_i`.
    pub fn normalized(&self) -> (Rational, Vec<BigInt>) {
        let vals = self.values();
        let num_gcd = vals.iter().fold(BigInt::zero(), |a, x| a.gcd(x.numer()));
        let den_lcm = vals.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
        if num_gcd.is_zero() {
            return (Rational::zero(), vec![BigInt::zero(); vals.len()]);
        }
        let s = Rational::new(num_gcd, den_lcm);
        let ints = vals.iter().map(|x| (x / &s).to_integer()).collect();
        (s, ints)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, ints) = self.normalized();
        if s.is_zero() {
            let zeros: Vec<&str> = ints.iter().map(|_| "0").collect();
            return write!(f, "diag({})", zeros.join(","));
        }
        let ks: Vec<String> = ints.iter().map(|k| k.to_string()).collect();
        if s.is_one() {
            write!(f, "diag({})", ks.join(","))
        } else {
            write!(f, "{} * diag({})", s, ks.join(","))
        }
    }
}

impl std::str::FromStr for Spectrum {
    type Err = Error;

    /// Parses the [`Display`](fmt::Display) form `s * diag(k1,...,kn)` or
    /// `diag(k1,...,kn)`, with the `k_i` in any order.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed spectrum `{text}`"));
        let text = text.trim();
        let (scale, body) = match text.split_once('*') {
            Some((s, b)) => (s.trim().parse::<Rational>().map_err(|_| bad())?, b.trim()),
            None => (Rational::one(), text),
        };
        let inner = body.strip_prefix("diag(").and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let vals = inner
            .split(',')
            .map(|t| t.trim().parse::<Rational>().map(|k| k * &scale).map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum::from_values(&vals))
    }
}

#[derive(Clone, Debug)]
pub struct NikolayevskyResult {
    pub endo: Matrix<Rational>,
    pub eigen: Vec<Eigen>,
    pub der_dim: usize,
}

impl NikolayevskyResult {
    pub fn spectrum(&self) -> Spectrum {
        Spectrum(self.eigen.iter().map(|e| (e.value.clone(), e.multiplicity)).collect())
    }

    pub fn eigenspace(&self, value: &Rational) -> Option<&crate::linalg::Subspace<Rational>> {
        self.eigen.iter().find(|e| &e.value == value).map(|e| &e.space)
    }

    pub fn is_positive(&self) -> bool {
        self.eigen.iter().all(|e| e.value.is_positive())
    }
}

/// The Nikolayevsky derivation: the semisimple `N ∈ Der(g)` with
/// `Tr(N D) = Tr(D)` for every derivation `D`.
pub fn nikolayevsky(g: &LieAlgebra<Rational>) -> Result<NikolayevskyResult> {
    let n = g.dim();
    let basis = derivation_basis_sparse(g);
    let k = basis.len();
    let lookup: Vec<HashMap<(usize, usize), &Rational>> =
        basis.iter().map(|d| d.iter().map(|(r, c, x)| ((*r, *c), x)).collect()).collect();
    let mut t = Matrix::zeros(k, k);
    for a in 0..k {
        for b in a..k {
            let mut s = Rational::zero();
            for (r, c, x) in &basis[a] {
                if let Some(y) = lookup[b].get(&(*c, *r)) {
                    s += x * *y;
                }
            }
            t[(a, b)] = s.clone();
            t[(b, a)] = s;
        }
    }
    let rhs: Vec<Rational> = basis
        .iter()
        .map(|d| d.iter().filter(|(r, c, _)| r == c).fold(Rational::zero(), |s, (_, _, x)| s + x))
        .collect();
    let x = t
        .solve(&rhs)?
        .ok_or_else(|| Error::Precondition("trace system has no solution".into()))?;
    let mut nmat: Matrix<Rational> = Matrix::zeros(n, n);
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (r, c, v) in &basis[a] {
            nmat[(*r, *c)] = nmat[(*r, *c)].clone() + xa * v;
        }
    }
    let s = semisimple_part(&nmat)?;
    if !is_derivation(g, &s)? {
        return Err(Error::Precondition("semisimple part is not a derivation".into()));
    }
    if !trace_check_against(&s, &basis).is_pass() {
        return Err(Error::Precondition("semisimple part fails the trace identity".into()));
    }
    let eigen = rational_eigen(&s)?;
    Ok(NikolayevskyResult { endo: s, eigen, der_dim: k })
}

/// Sparse form of a derivation basis, exposed for callers that need many
/// traces against it.
pub fn derivation_basis_entries<F: Field>(g: &LieAlgebra<F>) -> Vec<Vec<(usize, usize, F)>> {
    derivation_basis_sparse(g)
}

/// Derivations as sparse triples from dense matrices.
pub fn sparse_entries<F: Field>(m: &Matrix<F>) -> Vec<(usize, usize, F)> {
    to_sparse(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heisenberg() -> LieAlgebra<Rational> {
        LieAlgebra::from_brackets(3, [(0, 1, 2, Rational::from_i64(1))]).unwrap()
    }

    #[test]
    fn heisenberg_derivations() {
        let h = heisenberg();
        let der = derivation_space(&h);
        assert_eq!(der.len(), 6);
        for d in &der {
            assert!(is_derivation(&h, d).unwrap());
        }
        assert!(is_inner(&h, &h.ad_basis(0)).unwrap());
        let id = Matrix::identity(3);
        assert_eq!(is_inner(&h, &id), Err(Error::NotADerivation));
    }

    #[test]
    fn heisenberg_nikolayevsky() {
        let r = nikolayevsky(&heisenberg()).unwrap();
        let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(r.spectrum(), Spectrum::from_values(&[q(2, 3), q(2, 3), q(4, 3)]));
        assert_eq!(r.spectrum().to_string(), "2/3 * diag(1,1,2)");
    }
}
