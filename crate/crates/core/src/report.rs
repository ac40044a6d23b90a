//! The acceptance report: every reproduced number with PASS/FAIL.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{verify_entry, Catalog, Check};
use crate::constructions::{
    cotangent, cotangent_grading, double_extension, family_in, mirage_check, single_extension,
};
use crate::derivations::{nikolayevsky, Spectrum};
use crate::error::Result;
use crate::field::{add_vec, scale_vec};
use crate::free::{
    build_cached, cotangent_eigen_equation, cotangent_factor, estimate_check, free_lambda, nikolayevsky_free,
    witt_dim,
};
use crate::io::script::{parse_script, run_script};
use crate::io::text::{emit_algebra, parse_algebra};
use crate::nice::fingerprint::series_dims;
use crate::lie::{center, derived_algebra, nilpotency_step, quotient};
use crate::linalg::{Matrix, Subspace};
use crate::metric::{BilinearForm, MetricLieAlgebra};
use crate::nice::{
    check_nice_basis, eigenspace_bound_obstruction, fingerprint, fingerprint_verdict, graded_irreducibility,
    ucs_quotient_test, NiceCertificate,
};
use crate::{int, rat, Rational};

/// The shipped proof that `g11` has no nice basis.
pub const NONNICE11: &str = include_str!("../scripts/nonnice11.proof");

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl Criterion {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} {}. {} ({} checks)", self.number, self.title, self.checks.len())?;
        for c in self.failures() {
            writeln!(f, "    FAIL {}: {}", c.what, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub criteria: Vec<Criterion>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.criteria.iter().all(Criterion::pass)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.criteria {
            write!(f, "{c}")?;
        }
        let passed = self.criteria.iter().filter(|c| c.pass()).count();
        writeln!(f, "{passed}/{} criteria pass", self.criteria.len())
    }
}

pub const TITLES: [&str; 9] = [
    "catalog integrity",
    "Nikolayevsky spectra",
    "central series",
    "free nilpotent algebras",
    "inequalities",
    "constructions",
    "cotangents",
    "nice analysis",
    "property sweeps",
];

fn check(what: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check { what: what.into(), pass, detail: detail.into() }
}

fn from_result(what: impl Into<String>, r: Result<(bool, String)>) -> Check {
    match r {
        Ok((pass, detail)) => check(what, pass, detail),
        Err(e) => check(what, false, e.to_string()),
    }
}

pub fn criterion(n: u8, cat: &Catalog) -> Criterion {
    let checks = match n {
        1 => integrity(cat),
        2 => spectra(cat),
        3 => series(cat),
        4 => free_nilpotent(),
        5 => inequalities(),
        6 => constructions(cat),
        7 => cotangents(),
        8 => nice_analysis(cat),
        9 => sweeps(cat),
        _ => vec![check("criterion", false, format!("no criterion {n}"))],
    };
    Criterion { number: n, title: TITLES.get(usize::from(n) - 1).copied().unwrap_or("unknown"), checks }
}

pub fn acceptance_report(cat: &Catalog) -> Report {
    Report { criteria: (1..=9).map(|n| criterion(n, cat)).collect() }
}

fn integrity(cat: &Catalog) -> Vec<Check> {
    const KEPT: [&str; 4] = ["jacobi", "nondegenerate", "ad-invariant", "center = (g')^perp"];
    cat.entries()
        .flat_map(|e| {
            verify_entry(e)
                .checks
                .into_iter()
                .filter(|c| KEPT.contains(&c.what.as_str()))
                .map(move |c| Check { what: format!("{}: {}", e.name, c.what), ..c })
        })
        .collect()
}

fn spectrum_check(cat: &Catalog, name: &str, expected: &str) -> Check {
    from_result(
        format!("{name} spectrum"),
        (|| {
            let want: Spectrum = expected.parse()?;
            let got = cat.spectrum(name)?;
            Ok((got == want, format!("expected {want}, found {got}")))
        })(),
    )
}

fn spectra(cat: &Catalog) -> Vec<Check> {
    let mut out = vec![spectrum_check(cat, "g11", "33/119 * diag(1,1,2,2,3,3,3,4,4,5,5)")];
    out.push(from_result(
        "g11 eigenspaces",
        (|| {
            let g = &cat.load("g11")?.algebra;
            let nik = nikolayevsky(g)?;
            let blocks: [&[usize]; 5] = [&[0, 1], &[2, 3], &[4, 5, 6], &[7, 8], &[9, 10]];
            let mut ok = nik.eigen.len() == 5;
            for (e, b) in nik.eigen.iter().zip(blocks) {
                ok &= e.space == Subspace::coordinate(11, b)?;
            }
            let shown: Vec<String> = nik.eigen.iter().map(|e| e.space.to_string()).collect();
            Ok((ok, shown.join(" ")))
        })(),
    ));
    for name in ["h12", "n9", "ntilde10"] {
        out.push(spectrum_check(cat, name, &format!("diag({})", vec!["0"; cat.load(name).map_or(0, |e| e.algebra.dim())].join(","))));
    }
    for name in ["18a", "18b"] {
        out.push(spectrum_check(cat, name, "6/29 * diag(1,2,3,3,4,5,5,6,7)"));
    }
    for i in 1..=10 {
        let name = format!("table1:{i}");
        match cat.load(&name).map(|e| e.expected.spectrum.clone()) {
            Ok(Some(s)) => out.push(spectrum_check(cat, &name, &s.to_string())),
            _ => out.push(check(format!("{name} spectrum"), false, "no listed spectrum")),
        }
    }
    out
}

fn series_check(cat: &Catalog, name: &str, lcs: &[usize], ucs: &[usize]) -> Check {
    from_result(
        format!("{name} series"),
        (|| {
            let (l, u) = series_dims(&cat.load(name)?.algebra);
            Ok((l == lcs && u == ucs, format!("LCS {l:?} / UCS {u:?}")))
        })(),
    )
}

fn series(cat: &Catalog) -> Vec<Check> {
    vec![
        series_check(cat, "n9", &[9, 6, 5, 3, 2, 1, 0], &[1, 3, 4, 6, 7, 9]),
        series_check(cat, "ntilde10", &[10, 7, 5, 3, 2, 1, 0], &[2, 4, 5, 7, 8, 10]),
        from_result(
            "h12/z(h12) = n9",
            (|| {
                let h = &cat.load("h12")?.algebra;
                let q = quotient(h, &center(h))?;
                let n9 = &cat.load("n9")?.algebra;
                Ok((q.algebra.same_structure(n9), format!("representatives {:?}", q.representatives)))
            })(),
        ),
    ]
}

/// Hall basis of `n_{2,5}` as bracketings, and the defining brackets
/// `[e_a, e_b] = e_c`.
pub const HALL_WORDS: [&str; 14] = [
    "e1",
    "e2",
    "[e2,e1]",
    "[[e2,e1],e1]",
    "[[e2,e1],e2]",
    "[[[e2,e1],e1],e1]",
    "[[[e2,e1],e1],e2]",
    "[[[e2,e1],e2],e2]",
    "[[[[e2,e1],e1],e1],e1]",
    "[[[[e2,e1],e1],e1],e2]",
    "[[[[e2,e1],e1],e2],e2]",
    "[[[[e2,e1],e2],e2],e2]",
    "[[[e2,e1],e1],[e2,e1]]",
    "[[[e2,e1],e2],[e2,e1]]",
];
pub const HALL_BRACKETS: [(usize, usize, usize); 12] = [
    (2, 1, 3),
    (3, 1, 4),
    (3, 2, 5),
    (4, 1, 6),
    (4, 2, 7),
    (5, 2, 8),
    (6, 1, 9),
    (6, 2, 10),
    (7, 2, 11),
    (8, 2, 12),
    (4, 3, 13),
    (5, 3, 14),
];

fn free_nilpotent() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 2..=5u64 {
        let closed = [m, m * (m - 1) / 2, m * (m * m - 1) / 3, m * m * (m * m - 1) / 4, m * (m.pow(4) - 1) / 5];
        let got: Vec<u64> = (1..=5).map(|k| witt_dim(m, k)).collect();
        out.push(check(format!("d_{m}(1..5)"), got == closed, format!("{got:?}")));
    }
    out.push(from_result(
        "Hall basis of n_(2,5)",
        (|| {
            let f = build_cached(2, 5)?;
            let words: Vec<String> = f.hall_basis.iter().map(|w| w.tree.to_string()).collect();
            let mut ok = words == HALL_WORDS;
            let g = f.lie();
            for &(a, b, c) in &HALL_BRACKETS {
                let want: Vec<(usize, Rational)> = vec![(c - 1, int(1))];
                ok &= g.bracket_basis_sparse(a - 1, b - 1) == want;
            }
            Ok((ok && g.jacobi_check().is_pass(), format!("{} words", words.len())))
        })(),
    ));
    for m in 2..=5i64 {
        let l2 = rat(m, 2 * m - 1);
        let l3 = rat(m * m + m - 1, 3 * m * m + 2 * m - 4);
        let (g2, g3) = (free_lambda(m as usize, 2), free_lambda(m as usize, 3));
        out.push(check(format!("lambda({m},2)"), g2 == l2, g2.to_string()));
        out.push(check(format!("lambda({m},3)"), g3 == l3, g3.to_string()));
    }
    for (m, s) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        out.push(from_result(
            format!("nikolayevsky_free({m},{s}) = general solver"),
            (|| {
                let f = build_cached(m, s)?;
                let general = nikolayevsky(f.lie())?;
                let closed = nikolayevsky_free(m, s)?;
                Ok((general.endo == closed.endo && general.der_dim == closed.der_dim, closed.spectrum().to_string()))
            })(),
        ));
    }
    out
}

fn inequalities() -> Vec<Check> {
    let mut out = Vec::new();
    let mut bad = Vec::new();
    for m in 2..=6 {
        for s in 4..=12 {
            if !estimate_check(m, s).unwrap_or(false) {
                bad.push((m, s));
            }
        }
    }
    out.push(check("estimate, m=2..6, s=4..12", bad.is_empty(), format!("failing {bad:?}")));
    let mut zeros = Vec::new();
    for m in 2..=5 {
        for s in 3..=8 {
            for n in 1..=s {
                if cotangent_eigen_equation(m, s, n).unwrap_or(true) {
                    zeros.push((m, s, n));
                }
            }
        }
    }
    out.push(check("no root n in [1,s], m=2..5, s=3..8", zeros.is_empty(), format!("roots {zeros:?}")));
    out
}

fn same_metric_algebra(a: &MetricLieAlgebra<Rational>, cat: &Catalog, name: &str) -> Result<(bool, String)> {
    let e = cat.load(name)?;
    let gram_ok = e.metric.as_ref().is_some_and(|m| m.gram() == a.metric.gram());
    Ok((a.algebra.same_structure(&e.algebra) && gram_ok, format!("dim {}", a.dim())))
}

fn constructions(cat: &Catalog) -> Vec<Check> {
    let mut out = Vec::new();
    let d = Matrix::from_fn(4, 4, |r, c| match (r, c) {
        (3, 0) => int(1),
        (2, 1) => int(-1),
        _ => int(0),
    });
    let h = MetricLieAlgebra::neutral_abelian(2);
    out.push(from_result("single extension of R^4 = ext5", single_extension(&h, &d).and_then(|g| same_metric_algebra(&g, cat, "ext5"))));
    out.push(from_result("double extension of R^4 = ext6", double_extension(&h, &d).and_then(|g| same_metric_algebra(&g, cat, "ext6"))));
    for k in 12..=24 {
        out.push(from_result(
            format!("g_{k}"),
            (|| {
                let f = family_in(cat, k)?;
                let g = &f.algebra;
                let mut bad = Vec::new();
                if g.dim() != k {
                    bad.push("dim");
                }
                if !g.algebra.jacobi_check().is_pass() {
                    bad.push("jacobi");
                }
                if !g.metric.is_nondegenerate() || !g.metric.is_ad_invariant(&g.algebra)?.is_pass() {
                    bad.push("metric");
                }
                if !derived_algebra(&g.algebra).contains_subspace(&center(&g.algebra))? {
                    bad.push("z in g'");
                }
                if !mirage_check(&f.mirage)?.m1_to_m4() {
                    bad.push("M1-M4");
                }
                if !f.certificate.matches {
                    bad.push("certificate");
                }
                let detail = format!(
                    "g/z = {} + R^{}; failing {bad:?}",
                    f.certificate.core, f.certificate.abelian_dim
                );
                Ok((bad.is_empty(), detail))
            })(),
        ));
    }
    out
}

pub const COTANGENT_CASES: [(usize, usize); 5] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)];

fn cotangents() -> Vec<Check> {
    let mut out = Vec::new();
    for (m, s) in COTANGENT_CASES {
        out.push(from_result(
            format!("T*n_({m},{s})"),
            (|| {
                let f = build_cached(m, s)?;
                let n = f.dim();
                let t = cotangent(f.lie());
                let g = &t.algebra;
                let offsets: Vec<usize> = f.layer_dims.iter().scan(0, |acc, d| { let o = *acc; *acc += d; Some(o) }).collect();
                let layer = |k: usize, dual: bool| -> Vec<usize> {
                    let base = if dual { n } else { 0 };
                    (offsets[k - 1]..offsets[k - 1] + f.layer_dims[k - 1]).map(|i| base + i).collect()
                };
                let mut bad = Vec::new();
                if nilpotency_step(g) != Some(s) {
                    bad.push("step");
                }
                let z: Vec<usize> = layer(s, false).into_iter().chain(layer(1, true)).collect();
                if center(g) != Subspace::coordinate(2 * n, &z)? {
                    bad.push("center");
                }
                let mut d: Vec<usize> = (2..=s).flat_map(|k| layer(k, false)).collect();
                d.extend((1..s).flat_map(|k| layer(k, true)));
                if derived_algebra(g) != Subspace::coordinate(2 * n, &d)? {
                    bad.push("derived");
                }
                let gr = cotangent_grading(g, &f.layer_dims)?;
                if !graded_irreducibility(&gr)?.is_irreducible() {
                    bad.push("irreducible");
                }
                let tn = nikolayevsky(g)?;
                let a = cotangent_factor(&tn.endo, &nikolayevsky_free(m, s)?.endo, &t.metric)?;
                let a_ok = a.as_ref().is_some_and(|a| *a > int(0) && *a < int(1));
                if !a_ok {
                    bad.push("a");
                }
                let shown = a.map_or("none".to_string(), |a| a.to_string());
                Ok((bad.is_empty(), format!("a = {shown}; failing {bad:?}")))
            })(),
        ));
    }
    out
}

fn nice_analysis(cat: &Catalog) -> Vec<Check> {
    let mut out = Vec::new();
    for (m, s) in [(2, 3), (2, 4)] {
        out.push(from_result(
            format!("nice basis of n_({m},{s}) and its cotangent"),
            (|| {
                let f = build_cached(m, s)?;
                let t = cotangent(f.lie());
                let a = check_nice_basis(&NiceCertificate::new(f.lie().clone(), Matrix::identity(f.dim()))?)?;
                let b = check_nice_basis(&NiceCertificate::new(t.algebra.clone(), Matrix::identity(t.dim()))?)?;
                Ok((a.is_pass() && b.is_pass(), format!("{a:?}, {b:?}")))
            })(),
        ));
    }
    for m in [3, 4] {
        out.push(from_result(
            format!("eigenspace bound on n_({m},3)"),
            (|| {
                let v = eigenspace_bound_obstruction(build_cached(m, 3)?.lie())?;
                Ok((v.is_some(), v.map_or("none".into(), |v| format!("dim {} > {}", v.dim, v.bound))))
            })(),
        ));
    }
    for name in ["n9", "ntilde10"] {
        out.push(from_result(
            format!("{name} nonnice by fingerprint"),
            (|| {
                let v = fingerprint_verdict(&fingerprint(&cat.load(name)?.algebra)?, cat)?;
                Ok((v.is_nonnice(), format!("{v:?}")))
            })(),
        ));
    }
    out.push(from_result(
        "h12 nonnice by UCS quotient",
        (|| {
            let v = ucs_quotient_test(&cat.load("h12")?.algebra, cat)?;
            Ok((v.is_nonnice(), format!("{v:?}")))
        })(),
    ));
    for k in 12..=24 {
        out.push(from_result(
            format!("g_{k} nonnice by UCS quotient"),
            (|| {
                let v = ucs_quotient_test(&family_in(cat, k)?.algebra.algebra, cat)?;
                Ok((v.is_nonnice(), format!("{v:?}")))
            })(),
        ));
    }
    out.push(from_result(
        "replay nonnice11.proof",
        (|| {
            let script = parse_script(NONNICE11)?;
            let t = run_script(&script, cat)?;
            let ok = t.is_contradiction() && t.validated_steps() == script.steps.len();
            Ok((ok, format!("{:?} after {} steps", t.outcome, t.validated_steps())))
        })(),
    ));
    out
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| if rng.gen_bool(0.4) { int(rng.gen_range(-3..=3)) } else { int(0) })
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect()
}

/// A product of a few integer elementary row operations, as rows of the new
/// basis.
pub fn random_basis_change(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let mut p = Matrix::identity(n);
    for _ in 0..rng.gen_range(1..=4) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        match rng.gen_range(0..3) {
            0 if i != j => {
                let c = int(rng.gen_range(-2..=2));
                let rj = p.row(j).to_vec();
                let ri = add_vec(p.row(i), &scale_vec(&rj, &c));
                p.row_mut(i).clone_from_slice(&ri);
            }
            1 if i != j => {
                let (ri, rj) = (p.row(i).to_vec(), p.row(j).to_vec());
                p.row_mut(i).clone_from_slice(&rj);
                p.row_mut(j).clone_from_slice(&ri);
            }
            _ => {
                let c = int(if rng.gen_bool(0.5) { -1 } else { 2 });
                let ri = scale_vec(p.row(i), &c);
                p.row_mut(i).clone_from_slice(&ri);
            }
        }
    }
    p
}

pub const SWEEP_CASES: usize = 50;

fn sweeps(cat: &Catalog) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut out = Vec::new();

    let mut ok = true;
    for _ in 0..SWEEP_CASES {
        let (r, c) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let a = random_matrix(&mut rng, r, c);
        ok &= a.rank() + a.kernel().dim() == c && a.image().dim() == a.rank();
    }
    out.push(check("rank-nullity", ok, format!("{SWEEP_CASES} matrices")));

    let mut ok = true;
    for _ in 0..SWEEP_CASES {
        let n = rng.gen_range(1..=7);
        let (ru, rw) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let u = random_matrix(&mut rng, ru, n).row_vecs();
        let w = random_matrix(&mut rng, rw, n).row_vecs();
        let (u, w) = (Subspace::span(n, &u).expect("ambient"), Subspace::span(n, &w).expect("ambient"));
        let sum = u.sum(&w).expect("ambient").dim();
        let cap = u.intersect(&w).expect("ambient").dim();
        ok &= sum + cap == u.dim() + w.dim();
    }
    out.push(check("Grassmann identity", ok, format!("{SWEEP_CASES} pairs")));

    let mut ok = true;
    let mut rref_ok = true;
    for _ in 0..SWEEP_CASES {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let a = random_matrix(&mut rng, r, c);
        let once = a.rref().matrix;
        rref_ok &= once.rref().matrix == once;
    }
    for e in cat.entries() {
        let g = &e.algebra;
        let n = g.dim();
        for _ in 0..4 {
            let (x, y, z) = (random_vector(&mut rng, n), random_vector(&mut rng, n), random_vector(&mut rng, n));
            let (a, b) = (rat(rng.gen_range(-3..=3), 2), rat(rng.gen_range(-3..=3), 1));
            let lhs = g.bracket(&add_vec(&scale_vec(&x, &a), &scale_vec(&y, &b)), &z).expect("dim");
            let rhs = add_vec(&scale_vec(&g.bracket(&x, &z).expect("dim"), &a), &scale_vec(&g.bracket(&y, &z).expect("dim"), &b));
            let anti = add_vec(&g.bracket(&x, &y).expect("dim"), &g.bracket(&y, &x).expect("dim"));
            ok &= lhs == rhs && anti.iter().all(|c| *c == int(0));
        }
    }
    out.push(check("antisymmetry and bilinearity", ok, "catalog entries"));
    out.push(check("rref idempotence", rref_ok, format!("{SWEEP_CASES} matrices")));

    let mut ok = true;
    for e in cat.entries() {
        ok &= parse_algebra(&e.text).map(|d| emit_algebra(&d) == e.text).unwrap_or(false);
    }
    out.push(check("parser round-trip", ok, "catalog entries"));

    for e in cat.entries() {
        out.push(from_result(
            format!("fingerprint of {} under basis changes", e.name),
            (|| {
                let base = fingerprint(&e.algebra)?;
                for _ in 0..SWEEP_CASES {
                    let p = random_basis_change(&mut rng, e.algebra.dim());
                    let fp = fingerprint(&e.algebra.change_basis(&p)?)?;
                    if fp != base {
                        return Ok((false, format!("changed to {fp}")));
                    }
                }
                Ok((true, format!("{SWEEP_CASES} changes")))
            })(),
        ));
    }
    out
}

/// The catalog metric and form for a catalog entry, as a metric Lie algebra.
pub fn metric_entry(cat: &Catalog, name: &str) -> Result<MetricLieAlgebra<Rational>> {
    let e = cat.load(name)?;
    let m: BilinearForm<Rational> = e
        .metric
        .clone()
        .ok_or_else(|| crate::Error::Catalog(format!("{name} has no metric")))?;
    MetricLieAlgebra::new(e.algebra.clone(), m)
}
