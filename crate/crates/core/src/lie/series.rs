//! Subspace operations that depend on the bracket: series, centers,
//! centralizers and ideals.

use crate::error::{Error, Result};
use crate::field::{unit_vec, Field};
use crate::lie::algebra::LieAlgebra;
use crate::linalg::{Matrix, Subspace};

fn check_ambient<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<()> {
    if s.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: s.ambient_dim() });
    }
    Ok(())
}

/// `[S, T]`.
pub fn bracket_subspaces<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>, t: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(g, s)?;
    check_ambient(g, t)?;
    let tv = t.vectors();
    let mut out = Vec::with_capacity(s.dim() * t.dim());
    for x in s.vectors() {
        let ad = g.ad(&x)?;
        for y in &tv {
            out.push(ad.mul_vec(y)?);
        }
    }
    Subspace::span(g.dim(), &out)
}

/// `[g, S]`.
pub fn bracket_with_algebra<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(g, s)?;
    let sv = s.vectors();
    let mut out = Vec::with_capacity(g.dim() * s.dim());
    for i in 0..g.dim() {
        let ad = g.ad_basis(i);
        for y in &sv {
            out.push(ad.mul_vec(y)?);
        }
    }
    Subspace::span(g.dim(), &out)
}

pub fn derived_algebra<F: Field>(g: &LieAlgebra<F>) -> Subspace<F> {
    let vs: Vec<Vec<F>> = g.nonzero_brackets().map(|(i, j, _)| g.bracket_basis(i, j)).collect();
    Subspace::span(g.dim(), &vs).expect("brackets have ambient length")
}

/// Lower central series `g^0 = g, g^{k+1} = [g, g^k]`, listed until the
/// first repetition. For nilpotent `g` the last term is zero.
pub fn lcs<F: Field>(g: &LieAlgebra<F>) -> Vec<Subspace<F>> {
    let mut out = vec![Subspace::full(g.dim())];
    loop {
        let next = bracket_with_algebra(g, out.last().expect("nonempty")).expect("ambient");
        if &next == out.last().expect("nonempty") {
            return out;
        }
        out.push(next);
    }
}

/// Centralizer `{x : [x, u] = 0 for all u in U}`.
pub fn centralizer<F: Field>(g: &LieAlgebra<F>, u: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(g, u)?;
    let n = g.dim();
    let mut m = Matrix::zeros(0, n);
    for v in u.vectors() {
        // [x, v] = -ad(v) x
        m = m.vstack(&g.ad(&v)?)?;
    }
    Ok(m.kernel())
}

pub fn center<F: Field>(g: &LieAlgebra<F>) -> Subspace<F> {
    let n = g.dim();
    let mut m = Matrix::zeros(0, n);
    for i in 0..n {
        m = m.vstack(&g.ad_basis(i)).expect("square");
    }
    m.kernel()
}

/// `{x : [x, g] ⊆ C}`.
fn central_modulo<F: Field>(g: &LieAlgebra<F>, c: &Subspace<F>) -> Subspace<F> {
    let n = g.dim();
    let proj = c.quotient_projection();
    let mut m = Matrix::zeros(0, n);
    for j in 0..n {
        m = m.vstack(&proj.mul(&g.ad_basis(j)).expect("square")).expect("cols");
    }
    m.kernel()
}

/// Upper central series `C_1 = z(g) ⊆ C_2 ⊆ …`, listed until the first
/// repetition.
pub fn ucs<F: Field>(g: &LieAlgebra<F>) -> Vec<Subspace<F>> {
    let mut out = vec![center(g)];
    loop {
        let next = central_modulo(g, out.last().expect("nonempty"));
        if &next == out.last().expect("nonempty") {
            return out;
        }
        out.push(next);
    }
}

/// Derived series term `g^(order)`.
pub fn derived<F: Field>(g: &LieAlgebra<F>, order: usize) -> Subspace<F> {
    let mut s = Subspace::full(g.dim());
    for _ in 0..order {
        s = bracket_subspaces(g, &s, &s).expect("ambient");
    }
    s
}

pub fn is_ideal<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<bool> {
    check_ambient(g, s)?;
    s.contains_subspace(&bracket_with_algebra(g, s)?)
}

/// Smallest ideal containing `S`.
pub fn ideal_generated<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    let mut cur = s.clone();
    loop {
        let next = cur.sum(&bracket_with_algebra(g, &cur)?)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Largest ideal contained in `S`.
pub fn largest_ideal_in<F: Field>(g: &LieAlgebra<F>, s: &Subspace<F>) -> Result<Subspace<F>> {
    check_ambient(g, s)?;
    let mut cur = s.clone();
    loop {
        let mut next = cur.clone();
        for i in 0..g.dim() {
            next = next.intersect(&cur.preimage_under(&g.ad_basis(i))?)?;
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Number of nonzero terms `g^1, …` before the lower central series reaches
/// zero, or `None` if `g` is not nilpotent.
pub fn nilpotency_step<F: Field>(g: &LieAlgebra<F>) -> Option<usize> {
    let l = lcs(g);
    if l.last().is_some_and(Subspace::is_zero) {
        Some(l.len() - 1)
    } else {
        None
    }
}

pub fn is_nilpotent<F: Field>(g: &LieAlgebra<F>) -> bool {
    nilpotency_step(g).is_some()
}

pub fn dims<F: Field>(series: &[Subspace<F>]) -> Vec<usize> {
    series.iter().map(Subspace::dim).collect()
}

pub fn span_of<F: Field>(g: &LieAlgebra<F>, indices: &[usize]) -> Result<Subspace<F>> {
    Subspace::coordinate(g.dim(), indices)
}

pub fn basis_vector<F: Field>(g: &LieAlgebra<F>, i: usize) -> Vec<F> {
    unit_vec(g.dim(), i)
}
