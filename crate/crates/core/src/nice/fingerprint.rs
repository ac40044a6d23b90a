use std::fmt;

use crate::catalog::{Catalog, Slice};
use crate::derivations::{nikolayevsky, Spectrum};
use crate::error::Result;
use crate::lie::{dims, lcs, ucs, LieAlgebra};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    /// `dim g^k` from `g` down to `0`.
    pub lcs_dims: Vec<usize>,
    /// `dim C_k(g)` from the center up to `g`.
    pub ucs_dims: Vec<usize>,
    pub nik: Spectrum,
}

fn join(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {}; LCS {} / UCS {}; N = {}", self.dim, join(&self.lcs_dims), join(&self.ucs_dims), self.nik)
    }
}

/// `"LCS 9,6,5,3,2,1,0 / UCS 1,3,4,6,7,9"`.
pub fn series_line(g: &LieAlgebra<Rational>) -> String {
    format!("LCS {} / UCS {}", join(&dims(&lcs(g))), join(&dims(&ucs(g))))
}

pub fn series_dims(g: &LieAlgebra<Rational>) -> (Vec<usize>, Vec<usize>) {
    (dims(&lcs(g)), dims(&ucs(g)))
}

pub fn fingerprint(g: &LieAlgebra<Rational>) -> Result<Fingerprint> {
    let (lcs_dims, ucs_dims) = series_dims(g);
    Ok(Fingerprint { dim: g.dim(), lcs_dims, ucs_dims, nik: nikolayevsky(g)?.spectrum() })
}

fn slice_matches(s: &Slice, fp: &Fingerprint) -> bool {
    s.dim == fp.dim && s.lcs == fp.lcs_dims && s.ucs == fp.ucs_dims
}

/// Catalogued nice algebras (members of some slice) with the same dimension
/// and series dimensions as `fp`.
pub fn fingerprint_match(fp: &Fingerprint, catalog: &Catalog) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for s in catalog.slices() {
        for name in &s.members {
            let e = catalog.load(name)?;
            if out.contains(name) || e.algebra.dim() != fp.dim {
                continue;
            }
            if series_dims(&e.algebra) == (fp.lcs_dims.clone(), fp.ucs_dims.clone()) {
                out.push(name.clone());
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FingerprintVerdict {
    /// A complete slice matches and none of its members has the same
    /// Nikolayevsky spectrum.
    Nonnice { slice: String, candidates: Vec<String> },
    Inconclusive { candidates: Vec<String> },
}

impl FingerprintVerdict {
    pub fn is_nonnice(&self) -> bool {
        matches!(self, FingerprintVerdict::Nonnice { .. })
    }
}

pub fn fingerprint_verdict(fp: &Fingerprint, catalog: &Catalog) -> Result<FingerprintVerdict> {
    let candidates = fingerprint_match(fp, catalog)?;
    for s in catalog.slices().iter().filter(|s| s.complete && slice_matches(s, fp)) {
        let mut agree = false;
        for name in &s.members {
            agree |= catalog.spectrum(name)? == fp.nik;
        }
        if !agree {
            return Ok(FingerprintVerdict::Nonnice { slice: s.name.clone(), candidates });
        }
    }
    Ok(FingerprintVerdict::Inconclusive { candidates })
}
