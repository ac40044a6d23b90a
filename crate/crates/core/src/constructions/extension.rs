use crate::derivations::{is_derivation, is_inner};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::{center, derived_algebra, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::metric::{BilinearForm, MetricLieAlgebra};

fn check_skew_derivation<F: Field>(hm: &MetricLieAlgebra<F>, d: &Matrix<F>) -> Result<()> {
    let n = hm.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.rows() });
    }
    if !hm.metric.is_skew(d)? {
        return Err(Error::NotSkew);
    }
    if !is_derivation(&hm.algebra, d)? {
        return Err(Error::NotADerivation);
    }
    Ok(())
}

/// Brackets of `h` plus `h(D e_i, e_j) x` for the extra basis index `x`.
fn twisted_entries<F: Field>(hm: &MetricLieAlgebra<F>, d: &Matrix<F>, x: usize) -> Vec<(usize, usize, usize, F)> {
    let n = hm.dim();
    let mut entries = hm.algebra.entries();
    // h(D e_i, e_j) = (D^T G)_{ij}
    let dg = d.transpose().mul(hm.metric.gram()).expect("square");
    for i in 0..n {
        for j in i + 1..n {
            let c = dg[(i, j)].clone();
            if !c.is_zero() {
                entries.push((i, j, x, c));
            }
        }
    }
    entries
}

/// `[a, e_j] = D e_j` for the extra basis index `a`.
fn acting_entries<F: Field>(d: &Matrix<F>, a: usize) -> Vec<(usize, usize, usize, F)> {
    d.entries().map(|(k, j, c)| (a, j, k, c.clone())).collect()
}

/// Double extension of `(h, h)` by a skew-symmetric derivation `D`, in the
/// basis `(h, e, z)` with `[X,Y] = [X,Y]_h + h(DX,Y) z`, `[e,X] = DX` and
/// `g(e,z) = 1`.
pub fn double_extension<F: Field>(hm: &MetricLieAlgebra<F>, d: &Matrix<F>) -> Result<MetricLieAlgebra<F>> {
    check_skew_derivation(hm, d)?;
    let n = hm.dim();
    let (e, z) = (n, n + 1);
    let mut entries = twisted_entries(hm, d, z);
    entries.extend(acting_entries(d, e));
    let algebra = LieAlgebra::from_brackets(n + 2, entries)?;
    let mut gram = hm.metric.gram().block_diag(&Matrix::zeros(2, 2));
    gram[(e, z)] = F::one();
    gram[(z, e)] = F::one();
    MetricLieAlgebra::new(algebra, BilinearForm::new(gram)?)
}

/// Single extension of `(h, h)` by a rank-two skew-symmetric derivation
/// `D`, in the basis `(h, U)` with `[X,Y] = [X,Y]_h + h(DX,Y) U`,
/// `[U,X] = DX` and `g(U,U) = 1`.
pub fn single_extension<F: Field>(hm: &MetricLieAlgebra<F>, d: &Matrix<F>) -> Result<MetricLieAlgebra<F>> {
    check_skew_derivation(hm, d)?;
    let rank = d.rank();
    if rank != 2 {
        return Err(Error::Precondition(format!("single extension needs a rank-two derivation, got rank {rank}")));
    }
    let n = hm.dim();
    let u = n;
    let mut entries = twisted_entries(hm, d, u);
    entries.extend(acting_entries(d, u));
    let algebra = LieAlgebra::from_brackets(n + 1, entries)?;
    let gram = hm.metric.gram().block_diag(&Matrix::identity(1));
    MetricLieAlgebra::new(algebra, BilinearForm::new(gram)?)
}

/// Structural facts about a single extension `g` of `h` by `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleExtensionFacts {
    pub noninner: bool,
    pub center_in_kernel: bool,
    /// `g' = h' ⊕ <U>`.
    pub derived_is_sum: bool,
    /// `z(g) = z(h)`.
    pub same_center: bool,
}

impl SingleExtensionFacts {
    /// Whether the two conclusions hold whenever their hypotheses do.
    pub fn consistent(&self) -> bool {
        !(self.noninner && self.center_in_kernel) || (self.derived_is_sum && self.same_center)
    }
}

pub fn single_extension_facts<F: Field>(
    h: &LieAlgebra<F>,
    d: &Matrix<F>,
    g: &LieAlgebra<F>,
) -> Result<SingleExtensionFacts> {
    let n = h.dim();
    if g.dim() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, found: g.dim() });
    }
    let embed = |s: &Subspace<F>| -> Result<Subspace<F>> {
        let vs: Vec<Vec<F>> = s
            .vectors()
            .into_iter()
            .map(|mut v| {
                v.push(F::zero());
                v
            })
            .collect();
        Subspace::span(n + 1, &vs)
    };
    let zh = center(h);
    let noninner = !is_inner(h, d)?;
    let center_in_kernel = zh.image_under(d)?.is_zero();
    let sum = embed(&derived_algebra(h))?.sum(&Subspace::coordinate(n + 1, &[n])?)?;
    let derived_is_sum = derived_algebra(g) == sum;
    let same_center = center(g) == embed(&zh)?;
    Ok(SingleExtensionFacts { noninner, center_in_kernel, derived_is_sum, same_center })
}

/// Whether `ω` (antisymmetric, `ω_ij = ω(e_i, e_j)`) is a 2-cocycle of `g`.
pub fn is_cocycle<F: Field>(g: &LieAlgebra<F>, omega: &Matrix<F>) -> Result<bool> {
    let n = g.dim();
    if omega.rows() != n || omega.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: omega.rows() });
    }
    if omega.add(&omega.transpose())?.is_zero() {
        let w = |v: &[(usize, F)], k: usize| v.iter().fold(F::zero(), |s, (l, c)| s + c.clone() * omega[(*l, k)].clone());
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s = w(&g.bracket_basis_sparse(i, j), k)
                        + w(&g.bracket_basis_sparse(j, k), i)
                        + w(&g.bracket_basis_sparse(k, i), j);
                    if !s.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    } else {
        Err(Error::Precondition("cocycle matrix is not antisymmetric".into()))
    }
}

/// Central extension with `de^{n+1} = ω`, i.e. `[x,y]' = [x,y] - ω(x,y) c`
/// for the new central vector `c`.
pub fn central_extension<F: Field>(g: &LieAlgebra<F>, omega: &Matrix<F>) -> Result<LieAlgebra<F>> {
    if !is_cocycle(g, omega)? {
        return Err(Error::Precondition("form is not closed".into()));
    }
    let n = g.dim();
    let mut entries = g.entries();
    for i in 0..n {
        for j in i + 1..n {
            let c = omega[(i, j)].clone();
            if !c.is_zero() {
                entries.push((i, j, n, -c));
            }
        }
    }
    LieAlgebra::from_brackets(n + 1, entries)
}

/// Orthogonal direct sum of metric Lie algebras.
pub fn orthogonal_sum<F: Field>(a: &MetricLieAlgebra<F>, b: &MetricLieAlgebra<F>) -> MetricLieAlgebra<F> {
    a.direct_sum(b)
}
