//! Facts of the form "this subspace is spanned by elements of a nice basis"
//! and sound rules deriving new ones.

use std::fmt;

use crate::derivations::nikolayevsky;
use crate::error::{Error, Result};
use crate::field::{is_zero_vec, normalize_projective, proportional};
use crate::lie::{bracket_subspaces, LieAlgebra};
use crate::linalg::Subspace;
use crate::{QVector, Rational};

/// Known nice subspaces and nice elements of a Lie algebra, assuming a nice
/// basis exists. Rules return new states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeductionState {
    pub algebra: LieAlgebra<Rational>,
    pub nice_subspaces: Vec<Subspace<Rational>>,
    /// Projectively normalized: first nonzero coordinate is one.
    pub nice_elements: Vec<QVector>,
}

/// A fact produced by a rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    Element(QVector),
    Subspace(Subspace<Rational>),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Element(v) => write!(f, "{}", crate::io::text::format_vector(v)),
            Fact::Subspace(s) => write!(f, "{s}"),
        }
    }
}

fn rule_error(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl DeductionState {
    pub fn new(algebra: LieAlgebra<Rational>) -> Self {
        DeductionState { algebra, nice_subspaces: Vec::new(), nice_elements: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn is_nice_element(&self, v: &[Rational]) -> bool {
        !is_zero_vec(v) && self.nice_elements.iter().any(|w| proportional(v, w))
    }

    pub fn is_nice_subspace(&self, s: &Subspace<Rational>) -> bool {
        if s.is_zero() || self.nice_subspaces.contains(s) {
            return true;
        }
        s.dim() == 1 && self.is_nice_element(&s.vectors()[0])
    }

    fn require_element(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        if self.is_nice_element(v) {
            Ok(())
        } else {
            Err(rule_error(format!("{} is not known to be nice", crate::io::text::format_vector(v))))
        }
    }

    fn require_subspace(&self, s: &Subspace<Rational>) -> Result<()> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: s.ambient_dim() });
        }
        if self.is_nice_subspace(s) {
            Ok(())
        } else {
            Err(rule_error(format!("{s} is not known to be nice")))
        }
    }

    fn with_subspace(&self, s: Subspace<Rational>) -> Self {
        let mut st = self.clone();
        if !st.nice_subspaces.contains(&s) {
            st.nice_subspaces.push(s);
        }
        st
    }

    fn with_element(&self, v: &[Rational]) -> Self {
        let mut st = self.clone();
        let n = normalize_projective(v);
        if !st.nice_elements.contains(&n) {
            st.nice_elements.push(n);
        }
        st
    }
}

/// Eigenspaces of the Nikolayevsky derivation are nice, for a suitable
/// nice basis.
pub fn assume_eigenspaces_nice(st: &DeductionState) -> Result<(DeductionState, Vec<Subspace<Rational>>)> {
    let nik = nikolayevsky(&st.algebra)?;
    let spaces: Vec<Subspace<Rational>> = nik.eigen.into_iter().map(|e| e.space).collect();
    let mut out = st.clone();
    for s in &spaces {
        out = out.with_subspace(s.clone());
    }
    Ok((out, spaces))
}

/// The bracket of two nice elements is nice when nonzero.
pub fn nice_bracket(st: &DeductionState, u: &[Rational], v: &[Rational]) -> Result<(DeductionState, QVector)> {
    st.require_element(u)?;
    st.require_element(v)?;
    let w = st.algebra.bracket(u, v)?;
    if is_zero_vec(&w) {
        return Err(rule_error("bracket vanishes"));
    }
    Ok((st.with_element(&w), w))
}

/// `ker ad v` and `im ad v` are nice for nice `v`.
pub fn nice_ker_im(
    st: &DeductionState,
    v: &[Rational],
) -> Result<(DeductionState, Subspace<Rational>, Subspace<Rational>)> {
    st.require_element(v)?;
    let ad = st.algebra.ad(v)?;
    let (k, i) = (ad.kernel(), ad.image());
    Ok((st.with_subspace(k.clone()).with_subspace(i.clone()), k, i))
}

pub fn nice_intersect(
    st: &DeductionState,
    s: &Subspace<Rational>,
    t: &Subspace<Rational>,
) -> Result<(DeductionState, Subspace<Rational>)> {
    st.require_subspace(s)?;
    st.require_subspace(t)?;
    let r = s.intersect(t)?;
    Ok((st.with_subspace(r.clone()), r))
}

pub fn nice_sum(
    st: &DeductionState,
    s: &Subspace<Rational>,
    t: &Subspace<Rational>,
) -> Result<(DeductionState, Subspace<Rational>)> {
    st.require_subspace(s)?;
    st.require_subspace(t)?;
    let r = s.sum(t)?;
    Ok((st.with_subspace(r.clone()), r))
}

/// A one-dimensional nice subspace is spanned by a nice element.
pub fn nice_dim1_promote(st: &DeductionState, s: &Subspace<Rational>) -> Result<(DeductionState, QVector)> {
    st.require_subspace(s)?;
    if s.dim() != 1 {
        return Err(rule_error(format!("{s} has dimension {}, not 1", s.dim())));
    }
    let v = s.vectors().remove(0);
    Ok((st.with_element(&v), v))
}

/// `[S, T]` is nice for nice `S` and `T`.
pub fn nice_bracket_subspaces(
    st: &DeductionState,
    s: &Subspace<Rational>,
    t: &Subspace<Rational>,
) -> Result<(DeductionState, Subspace<Rational>)> {
    st.require_subspace(s)?;
    st.require_subspace(t)?;
    let r = bracket_subspaces(&st.algebra, s, t)?;
    Ok((st.with_subspace(r.clone()), r))
}

/// `{v ∈ S : [v, w] ∈ T}` is nice for nice `S`, `T` and nice element `w`:
/// distinct basis elements of `S` bracket with `w` into distinct basis
/// directions.
pub fn nice_constraint_subspace(
    st: &DeductionState,
    s: &Subspace<Rational>,
    w: &[Rational],
    t: &Subspace<Rational>,
) -> Result<(DeductionState, Subspace<Rational>)> {
    st.require_subspace(s)?;
    st.require_element(w)?;
    st.require_subspace(t)?;
    // [v, w] = -ad(w) v
    let pre = t.preimage_under(&st.algebra.ad(w)?)?;
    let r = s.intersect(&pre)?;
    Ok((st.with_subspace(r.clone()), r))
}

/// Fires when `w1, w2` are independent nice elements with `[v, w1]` and
/// `[v, w2]` nonzero and proportional for nice `v`: in a nice basis,
/// `e_i ⌟ de^j` would then not be a multiple of a single dual element.
pub fn contradiction_check(st: &DeductionState, v: &[Rational], w1: &[Rational], w2: &[Rational]) -> Result<bool> {
    st.require_element(v)?;
    st.require_element(w1)?;
    st.require_element(w2)?;
    if proportional(w1, w2) {
        return Ok(false);
    }
    let a = st.algebra.bracket(v, w1)?;
    let b = st.algebra.bracket(v, w2)?;
    Ok(!is_zero_vec(&a) && !is_zero_vec(&b) && proportional(&a, &b))
}
