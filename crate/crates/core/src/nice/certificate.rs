use std::fmt;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::io::text::format_vector;
use crate::Rational;

/// A candidate nice basis, given as the rows of `basis`.
#[derive(Clone, Debug)]
pub struct NiceCertificate {
    pub algebra: LieAlgebra<Rational>,
    pub basis: Matrix<Rational>,
}

impl NiceCertificate {
    pub fn new(algebra: LieAlgebra<Rational>, basis: Matrix<Rational>) -> Result<Self> {
        if basis.rows() != algebra.dim() || basis.cols() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: basis.rows() });
        }
        if basis.rank() != algebra.dim() {
            return Err(Error::Singular);
        }
        Ok(NiceCertificate { algebra, basis })
    }
}

/// A violated condition, with indices into the candidate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceViolation {
    /// `[b_i, b_j]` is not a multiple of a single basis element.
    Bracket { i: usize, j: usize, value: Vec<Rational> },
    /// `b_i ⌟ d b^k` involves both `b^j1` and `b^j2`.
    Contraction { i: usize, k: usize, j1: usize, j2: usize },
}

impl fmt::Display for NiceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NiceViolation::Bracket { i, j, value } => {
                write!(f, "[e{}, e{}] = {} is not a multiple of a basis element", i + 1, j + 1, format_vector(value))
            }
            NiceViolation::Contraction { i, k, j1, j2 } => write!(
                f,
                "e{}-component of both [e{}, e{}] and [e{}, e{}] is nonzero",
                k + 1,
                i + 1,
                j1 + 1,
                i + 1,
                j2 + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceCheck {
    Pass,
    Witness(NiceViolation),
}

impl NiceCheck {
    pub fn is_pass(&self) -> bool {
        matches!(self, NiceCheck::Pass)
    }
}

pub fn check_nice_basis(c: &NiceCertificate) -> Result<NiceCheck> {
    let g = c.algebra.change_basis(&c.basis)?;
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            if g.bracket_basis_sparse(i, j).len() > 1 {
                return Ok(NiceCheck::Witness(NiceViolation::Bracket { i, j, value: g.bracket_basis(i, j) }));
            }
        }
    }
    for i in 0..n {
        let mut seen: Vec<Option<usize>> = vec![None; n];
        for j in 0..n {
            for (k, _) in g.bracket_basis_sparse(i, j) {
                if let Some(j1) = seen[k] {
                    return Ok(NiceCheck::Witness(NiceViolation::Contraction { i, k, j1, j2: j }));
                }
                seen[k] = Some(j);
            }
        }
    }
    Ok(NiceCheck::Pass)
}
