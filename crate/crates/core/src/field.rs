//! Scalar fields the linear algebra and Lie algebra layers are generic over.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, Zero};

/// An exact field of characteristic zero.
///
/// Everything in this crate compares scalars with `==`, so only exact
/// representations belong here.
pub trait Field:
    Clone + Debug + Display + Eq + Hash + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Field for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }
}

/// Zero vector of length `n`.
pub fn zero_vec<F: Field>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

/// Standard basis vector `e_i` (0-based) of length `n`.
pub fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = zero_vec(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `a + s*b`, in place on `a`.
pub fn axpy<F: Field>(a: &mut [F], s: &F, b: &[F]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.clone() + s.clone() * y.clone();
        }
    }
}

pub fn scale_vec<F: Field>(v: &[F], s: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn add_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// Scale so that the first nonzero coordinate is one. Zero stays zero.
pub fn normalize_projective<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let inv = lead.inv();
            scale_vec(v, &inv)
        }
        None => v.to_vec(),
    }
}

/// True when `a` and `b` are nonzero multiples of each other.
pub fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    !is_zero_vec(a) && !is_zero_vec(b) && normalize_projective(a) == normalize_projective(b)
}
