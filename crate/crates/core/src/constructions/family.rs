use crate::catalog::Catalog;
use crate::constructions::extension::{double_extension, single_extension};
use crate::constructions::mirage::MirageWitness;
use crate::error::{Error, Result};
use crate::field::unit_vec;
use crate::lie::{center, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::metric::MetricLieAlgebra;
use crate::{int, Rational};
use num_traits::Zero;

/// Explicit basis of `g/z(g)` in which its structure constants equal those
/// of `core ⊕ R^j`.
#[derive(Clone, Debug)]
pub struct QuotientCertificate {
    /// Name of the catalog entry playing the role of `core`.
    pub core: String,
    /// Rows are representatives in `g`: first the images of the core basis,
    /// then a basis of the abelian factor.
    pub basis: Matrix<Rational>,
    pub abelian_dim: usize,
    /// Structure constants of `g/z(g)` in the emitted basis.
    pub quotient: LieAlgebra<Rational>,
    pub matches: bool,
}

/// Check that `reps` together with a coordinate complement give a basis of
/// `g/z(g)` realising `core ⊕ R^j`.
pub fn quotient_certificate(
    g: &LieAlgebra<Rational>,
    core_name: &str,
    core: &LieAlgebra<Rational>,
    reps: &[Vec<Rational>],
) -> Result<QuotientCertificate> {
    if reps.len() != core.dim() {
        return Err(Error::DimensionMismatch { expected: core.dim(), found: reps.len() });
    }
    let n = g.dim();
    let z = center(g);
    let mut span = z.sum(&Subspace::span(n, reps)?)?;
    if span.dim() != z.dim() + reps.len() {
        return Err(Error::Precondition("representatives are dependent modulo the center".into()));
    }
    let mut basis: Vec<Vec<Rational>> = reps.to_vec();
    for i in 0..n {
        let e = unit_vec(n, i);
        if !span.contains(&e)? {
            span = span.sum(&Subspace::span(n, std::slice::from_ref(&e))?)?;
            basis.push(e);
        }
    }
    let abelian_dim = basis.len() - reps.len();
    let proj = z.quotient_projection();
    let images: Vec<Vec<Rational>> = basis.iter().map(|b| proj.mul_vec(b)).collect::<Result<_>>()?;
    let m = Matrix::from_columns(proj.rows(), &images)?;
    let minv = m.inverse()?;
    let mut entries = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let v = minv.mul_vec(&proj.mul_vec(&g.bracket(&basis[a], &basis[b])?)?)?;
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    entries.push((a, b, k, c));
                }
            }
        }
    }
    let quotient = LieAlgebra::from_brackets_unchecked(basis.len(), entries)?;
    let matches = quotient.same_structure(&core.direct_sum(&LieAlgebra::abelian(abelian_dim)));
    Ok(QuotientCertificate {
        core: core_name.to_string(),
        basis: Matrix::from_rows(n, &basis)?,
        abelian_dim,
        quotient,
        matches,
    })
}

/// A member `g_k` of the family of nonnice irreducible metric Lie algebras.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub k: usize,
    pub algebra: MetricLieAlgebra<Rational>,
    /// How the member was built.
    pub recipe: String,
    /// Inclusion of `h12` as the first twelve coordinates.
    pub mirage: MirageWitness<Rational>,
    pub certificate: QuotientCertificate,
}

/// Indices of the basis vectors of `h12` representing `h12/z(h12)`.
const CORE_REPS: [usize; 9] = [0, 1, 2, 3, 6, 7, 8, 9, 10];

fn endo(n: usize, maps: &[(usize, usize, i64)]) -> Matrix<Rational> {
    let mut m = Matrix::zeros(n, n);
    for &(from, to, c) in maps {
        m[(to, from)] = int(c);
    }
    m
}

/// `f(e1) = e12`, `f(e11) = e5`, zero elsewhere on a space of dimension `n`.
pub fn f_map(n: usize) -> Matrix<Rational> {
    endo(n, &[(0, 11, 1), (10, 4, 1)])
}

/// `e2 ↦ e12`, `e11 ↦ -e6` on `h12`.
pub fn f_prime() -> Matrix<Rational> {
    endo(12, &[(1, 11, 1), (10, 5, -1)])
}

/// `D_0` on `h12`: `e1 ↦ e6`, `e2 ↦ e5`.
pub fn d_zero() -> Matrix<Rational> {
    endo(12, &[(0, 5, 1), (1, 4, 1)])
}

/// Skew derivation of `h12 ⊕ [R^2] ⊕ R^{4n}` with basis
/// `(e1..e12, [v̂, ŵ], v1..v2n, w1..w2n)`.
pub fn d_map(n: usize, hat: bool) -> Matrix<Rational> {
    let off = if hat { 14 } else { 12 };
    let dim = off + 4 * n;
    let v = |i: usize| off + i - 1;
    let w = |i: usize| off + 2 * n + i - 1;
    let mut maps = vec![(1, 4, 1)];
    if hat {
        maps.extend([(0, 5, 1), (0, 13, 1), (12, 4, 1)]);
    } else {
        maps.push((0, 5, 1));
    }
    for i in 1..=n {
        maps.push((v(2 * i), w(2 * i - 1), 1));
        maps.push((v(2 * i - 1), w(2 * i), -1));
    }
    endo(dim, &maps)
}

fn h12(cat: &Catalog) -> Result<MetricLieAlgebra<Rational>> {
    let e = cat.load("h12")?;
    let metric = e.metric.clone().ok_or_else(|| Error::Catalog("h12 has no metric".into()))?;
    MetricLieAlgebra::new(e.algebra.clone(), metric)
}

fn even_member(cat: &Catalog, k: usize) -> Result<(MetricLieAlgebra<Rational>, String)> {
    let h = h12(cat)?;
    match k {
        12 => Ok((h, "h12".into())),
        14 => Ok((double_extension(&h, &f_prime())?, "double extension of h12 by e2->e12, e11->-e6".into())),
        _ => {
            let m = k - 14;
            let hat = m % 4 == 2;
            let n = m / 4;
            let mut base = h;
            if hat {
                base = base.direct_sum(&MetricLieAlgebra::neutral_abelian(1));
            }
            if n > 0 {
                base = base.direct_sum(&MetricLieAlgebra::neutral_abelian(2 * n));
            }
            let summand = if hat { format!("R^2 + R^{}", 4 * n) } else { format!("R^{}", 4 * n) };
            let de = double_extension(&base, &d_map(n, hat))?;
            Ok((de, format!("double extension of h12 + {summand} by D_{}", 4 * n + usize::from(hat) * 2)))
        }
    }
}

/// The member of dimension `k ≥ 12`. Even members are `h12` itself or double
/// extensions of `h12` plus a neutral abelian summand; odd members are the
/// single extension of the previous even member by `f`.
pub fn family_in(cat: &Catalog, k: usize) -> Result<FamilyMember> {
    if k < 12 {
        return Err(Error::Precondition(format!("family members start at dimension 12, got {k}")));
    }
    let h = h12(cat)?;
    let (algebra, recipe, core_name) = if k.is_multiple_of(2) {
        let (g, r) = even_member(cat, k)?;
        (g, r, "n9")
    } else {
        let (g, r) = even_member(cat, k - 1)?;
        let se = single_extension(&g, &f_map(g.dim()))?;
        (se, format!("single extension of [{r}] by f"), "ntilde10")
    };
    if algebra.dim() != k {
        return Err(Error::DimensionMismatch { expected: k, found: algebra.dim() });
    }
    let mut reps: Vec<Vec<Rational>> = CORE_REPS.iter().map(|&i| unit_vec(k, i)).collect();
    if k % 2 == 1 {
        let mut u = vec![Rational::zero(); k];
        u[k - 1] = int(-1);
        reps.push(u);
    }
    let core = &cat.load(core_name)?.algebra;
    let certificate = quotient_certificate(&algebra.algebra, core_name, core, &reps)?;
    let mirage = MirageWitness::leading(h, algebra.clone())?;
    Ok(FamilyMember { k, algebra, recipe, mirage, certificate })
}

pub fn family(k: usize) -> Result<FamilyMember> {
    family_in(&Catalog::builtin()?, k)
}
