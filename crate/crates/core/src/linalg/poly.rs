//! Univariate polynomials and exact rational root finding.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Field;
use crate::linalg::matrix::Matrix;
use crate::Rational;

/// Polynomial with coefficients stored from the constant term up. The
/// leading coefficient is never zero; the zero polynomial has no
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![F::one()] }
    }

    /// `x - a`.
    pub fn linear(a: F) -> Self {
        Poly { coeffs: vec![-a, F::one()] }
    }

    pub fn x() -> Self {
        Poly { coeffs: vec![F::zero(), F::one()] }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = l.inv();
                Poly::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
            None => self.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(F::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(c)
    }

    pub fn scale(&self, s: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial").inv();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * dl.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        self.mul(o).div_rem(&self.gcd(o)).0.monic()
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// Product of the distinct irreducible factors, made monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&self.gcd(&self.derivative())).0.monic()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Matrix<F> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).expect("square matrix");
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        acc
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag == "1";
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Scaled copy with coprime integer coefficients and positive leading term.
pub fn primitive_integer(p: &Poly<Rational>) -> Vec<BigInt> {
    if p.is_zero() {
        return Vec::new();
    }
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() {
        for c in &mut ints {
            *c = &*c / &g;
        }
    }
    if ints.last().is_some_and(|l| l.is_negative()) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn sign_changes(values: &[Rational]) -> usize {
    let signs: Vec<bool> = values.iter().filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sturm_sequence(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

/// Integer multiple of `p` by a positive rational, coefficients low to high.
fn integer_multiple(p: &Poly<Rational>) -> Vec<BigInt> {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g).collect()
}

/// Sign of `p(a/b) * b^deg` for integer `p` and `b > 0`.
fn sign_at(p: &[BigInt], x: &Rational) -> i8 {
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_count(seq: &[Vec<BigInt>], x: &Rational) -> usize {
    let signs: Vec<i8> = seq.iter().map(|q| sign_at(q, x)).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Bound on the absolute value of every real root (Cauchy).
fn root_bound(p: &Poly<Rational>) -> Rational {
    let l = p.leading().expect("nonzero").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1].iter().map(|c| c.abs() / l.clone()).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::one()
}

/// Fraction with the smallest denominator in the closed interval `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi.clone(), &-lo.clone());
    }
    // Stern-Brocot descent for 0 < lo <= hi.
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    let a = lo.clone() - fl.clone();
    let b = hi.clone() - fl.clone();
    // 0 < a <= b < 1, recurse on reciprocals.
    let r = simplest_between(&b.recip(), &a.recip());
    fl + r.recip()
}

/// Every rational root of `p`, in increasing order, without multiplicity.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sf = p.squarefree_part();
    let ints = primitive_integer(&sf);
    let lead = Rational::from_integer(ints.last().expect("nonzero").clone());
    // Two distinct roots with denominator dividing the leading coefficient
    // differ by at least 1/L, so an interval narrower than 1/(2L^2) holds at
    // most one candidate fraction.
    let width = Rational::one() / (Rational::from_integer(BigInt::from(2)) * lead.clone() * lead.clone());
    let seq: Vec<Vec<BigInt>> = sturm_sequence(&sf).iter().map(integer_multiple).collect();
    let bound = root_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        if sf.eval(&lo).is_zero() {
            push_unique(&mut out, lo.clone());
        }
        let count = sturm_count(&seq, &lo).saturating_sub(sturm_count(&seq, &hi));
        if count == 0 {
            continue;
        }
        if count == 1 {
            // The simplest fraction in a shrinking isolating interval reaches
            // a rational root long before the width bound is hit.
            let cand = simplest_between(&lo, &hi);
            if cand > lo && sf.eval(&cand).is_zero() {
                push_unique(&mut out, cand);
                continue;
            }
            if sf.eval(&hi).is_zero() {
                push_unique(&mut out, hi.clone());
                continue;
            }
            if hi.clone() - lo.clone() < width {
                continue;
            }
        }
        let mid = (lo.clone() + hi.clone()) / Rational::from_integer(BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort();
    out.dedup();
    out
}

fn push_unique(v: &mut Vec<Rational>, x: Rational) {
    if !v.contains(&x) {
        v.push(x);
    }
}

/// Multiplicity of `a` as a root of `p`.
pub fn root_multiplicity<F: Field>(p: &Poly<F>, a: &F) -> usize {
    let lin = Poly::linear(a.clone());
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() {
        let (qq, r) = q.div_rem(&lin);
        if !r.is_zero() {
            break;
        }
        q = qq;
        m += 1;
    }
    m
}

/// Counts of positive, negative and zero roots of a polynomial whose roots
/// are all real, read off from Descartes' rule of signs.
pub fn real_rooted_sign_counts(p: &Poly<Rational>) -> (usize, usize, usize) {
    let c = p.coeffs();
    let zeros = c.iter().take_while(|x| x.is_zero()).count();
    let pos = sign_changes(c);
    let flipped: Vec<Rational> = c.iter().enumerate().map(|(i, x)| if i % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    let neg = sign_changes(&flipped);
    (pos, neg, zeros)
}
