//! Minimal and characteristic polynomials, Jordan-Chevalley semisimple
//! parts and rational eigenspaces.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{axpy, is_zero_vec, unit_vec, Field};
use crate::linalg::matrix::Matrix;
use crate::linalg::poly::{rational_roots, root_multiplicity, Poly};
use crate::linalg::subspace::Subspace;
use crate::Rational;

fn require_square<F: Field>(m: &Matrix<F>) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::Precondition("square matrix required".into()))
    }
}

/// Monic polynomial of least degree with `p(M) v = 0`.
pub fn vector_minimal_polynomial<F: Field>(m: &Matrix<F>, v: &[F]) -> Result<Poly<F>> {
    require_square(m)?;
    let n = m.rows();
    if is_zero_vec(v) {
        return Ok(Poly::one());
    }
    // (reduced vector, its expression in powers, pivot)
    let mut echelon: Vec<(Vec<F>, Vec<F>, usize)> = Vec::new();
    let mut cur = v.to_vec();
    for k in 0..=n {
        let mut red = cur.clone();
        let mut expr = vec![F::zero(); k + 1];
        expr[k] = F::one();
        for (bv, be, p) in &echelon {
            if !red[*p].is_zero() {
                let c = -red[*p].clone();
                axpy(&mut red, &c, bv);
                axpy(&mut expr[..be.len()], &c, be);
            }
        }
        match red.iter().position(|x| !x.is_zero()) {
            None => return Ok(Poly::new(expr).monic()),
            Some(p) => {
                let inv = red[p].inv();
                let red: Vec<F> = red.iter().map(|x| x.clone() * inv.clone()).collect();
                let expr: Vec<F> = expr.iter().map(|x| x.clone() * inv.clone()).collect();
                echelon.push((red, expr, p));
            }
        }
        cur = m.mul_vec(&cur)?;
    }
    unreachable!("Krylov sequence of length n+1 is dependent")
}

/// Minimal polynomial, as the least common multiple of the minimal
/// polynomials of the standard basis vectors.
pub fn minimal_polynomial<F: Field>(m: &Matrix<F>) -> Result<Poly<F>> {
    require_square(m)?;
    let n = m.rows();
    let mut acc = Poly::one();
    for i in 0..n {
        let p = vector_minimal_polynomial(m, &unit_vec(n, i))?;
        acc = acc.lcm(&p);
    }
    Ok(acc)
}

/// Characteristic polynomial `det(xI - M)` by Faddeev-LeVerrier.
pub fn characteristic_polynomial<F: Field>(m: &Matrix<F>) -> Result<Poly<F>> {
    require_square(m)?;
    let n = m.rows();
    let mut coeffs = vec![F::zero(); n + 1];
    coeffs[n] = F::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk)?;
        for i in 0..n {
            next[(i, i)] = next[(i, i)].clone() + coeffs[n - k + 1].clone();
        }
        let t = m.trace_product(&next);
        coeffs[n - k] = -t / F::from_i64(k as i64);
        mk = next;
    }
    Ok(Poly::new(coeffs))
}

/// Semisimple part `S` of the additive Jordan-Chevalley decomposition.
///
/// Newton iteration on the squarefree part `q` of the minimal polynomial.
/// The result is a polynomial in `M`, so it is exact and commutes with `M`.
pub fn semisimple_part<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    require_square(m)?;
    let q = minimal_polynomial(m)?.squarefree_part();
    let dq = q.derivative();
    let mut s = m.clone();
    for _ in 0..64 {
        let qs = q.eval_matrix(&s);
        if qs.is_zero() {
            return Ok(s);
        }
        let step = qs.mul(&dq.eval_matrix(&s).inverse()?)?;
        s = s.sub(&step)?;
    }
    Err(Error::Precondition("Newton iteration did not converge".into()))
}

/// Nilpotent part `M - S`.
pub fn nilpotent_part<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    m.sub(&semisimple_part(m)?)
}

pub fn eigenspace<F: Field>(m: &Matrix<F>, lambda: &F) -> Result<Subspace<F>> {
    require_square(m)?;
    let n = m.rows();
    let mut a = m.clone();
    for i in 0..n {
        a[(i, i)] = a[(i, i)].clone() - lambda.clone();
    }
    Ok(a.kernel())
}

/// Eigenvalue with its algebraic multiplicity and eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigen {
    pub value: Rational,
    pub multiplicity: usize,
    pub space: Subspace<Rational>,
}

/// Rational eigen decomposition, increasing in eigenvalue. Fails when the
/// characteristic polynomial has an irrational or complex root.
pub fn rational_eigen(m: &Matrix<Rational>) -> Result<Vec<Eigen>> {
    let chi = characteristic_polynomial(m)?;
    let roots = rational_roots(&chi);
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for r in roots {
        let mult = root_multiplicity(&chi, &r);
        total += mult;
        let space = eigenspace(m, &r)?;
        out.push(Eigen { value: r, multiplicity: mult, space });
    }
    if total != m.rows() {
        return Err(Error::Precondition("spectrum is not rational".into()));
    }
    Ok(out)
}

/// True when `M` is diagonalizable over the rationals.
pub fn is_rationally_diagonalizable(m: &Matrix<Rational>) -> Result<bool> {
    Ok(match rational_eigen(m) {
        Ok(es) => es.iter().all(|e| e.space.dim() == e.multiplicity),
        Err(Error::Precondition(_)) => false,
        Err(e) => return Err(e),
    })
}

pub fn is_nilpotent<F: Field>(m: &Matrix<F>) -> Result<bool> {
    require_square(m)?;
    let p = minimal_polynomial(m)?;
    Ok(p.coeffs().iter().rev().skip(1).all(Zero::is_zero) && p.leading().is_some_and(One::is_one))
}
