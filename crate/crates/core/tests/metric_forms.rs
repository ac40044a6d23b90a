use nilmetric::catalog::Catalog;
use nilmetric::constructions::{cotangent, dual_projection};
use nilmetric::constructions::family::d_zero;
use nilmetric::field::unit_vec;
use nilmetric::free::build;
use nilmetric::io::text::parse_algebra;
use nilmetric::lie::{center, derived_algebra, LieAlgebra};
use nilmetric::linalg::{Matrix, Subspace};
use nilmetric::metric::{BilinearForm, InvarianceReport};
use nilmetric::{int, Rational};
use proptest::prelude::*;

fn cat() -> Catalog {
    Catalog::builtin().unwrap()
}

fn metric_of(name: &str) -> (LieAlgebra<Rational>, BilinearForm<Rational>) {
    let c = cat();
    let e = c.load(name).unwrap();
    (e.algebra.clone(), e.metric.clone().unwrap())
}

#[test]
fn g11_metric_is_invariant() {
    let (g, b) = metric_of("g11");
    assert!(b.is_nondegenerate());
    assert!(b.is_ad_invariant(&g).unwrap().is_pass());
}

#[test]
fn abelian_any_symmetric_form() {
    let g = LieAlgebra::<Rational>::abelian(3);
    let b = BilinearForm::from_terms(3, &[(0, 1, int(2)), (2, 2, int(-5))]).unwrap();
    assert!(b.is_ad_invariant(&g).unwrap().is_pass());
}

#[test]
fn perturbed_g11_metric_has_witness() {
    let c = cat();
    let text = c.load("g11").unwrap().text.replace("- 2 e5*e5", "- e5*e5");
    let doc = parse_algebra(&text).unwrap();
    let g = doc.to_algebra(true).unwrap();
    let b = doc.to_metric().unwrap().unwrap();
    let InvarianceReport::Witness { i, j, k, defect } = b.is_ad_invariant(&g).unwrap() else {
        panic!("perturbed metric passed");
    };
    let n = g.dim();
    let (ei, ej, ek) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
    let by_hand = b.eval(&g.bracket(&ei, &ej).unwrap(), &ek).unwrap() + b.eval(&ej, &g.bracket(&ei, &ek).unwrap()).unwrap();
    assert_eq!(by_hand, defect);
    assert_ne!(defect, int(0));
}

#[test]
fn orthogonal_complements() {
    let b = BilinearForm::<Rational>::neutral(2);
    assert!(b.orth_complement(&Subspace::full(4)).unwrap().is_zero());
    let v = Subspace::coordinate(4, &[0, 1]).unwrap();
    assert_eq!(b.orth_complement(&v).unwrap(), v);
    assert!(!b.is_nondegenerate_on(&v).unwrap());

    let (h, bh) = metric_of("h12");
    assert_eq!(bh.orth_complement(&center(&h)).unwrap(), derived_algebra(&h));
}

#[test]
fn degenerate_form_rejected() {
    let b = BilinearForm::from_terms(2, &[(0, 0, int(1))]).unwrap();
    assert!(!b.is_nondegenerate());
    assert!(b.orth_complement(&Subspace::full(2)).is_err());
    assert!(b.metric_adjoint(&Matrix::identity(2)).is_err());
}

#[test]
fn adjoints() {
    let (_, b) = metric_of("g11");
    assert!(b.metric_adjoint(&Matrix::identity(11)).unwrap().is_identity());

    let t = cotangent(build(2, 3).unwrap().lie());
    let p = dual_projection::<Rational>(5);
    let sum = p.add(&t.metric.metric_adjoint(&p).unwrap()).unwrap();
    assert!(sum.is_identity());
}

#[test]
fn d_zero_is_skew_on_h12() {
    let (h, b) = metric_of("h12");
    assert!(b.is_skew(&d_zero()).unwrap());
    assert!(nilmetric::derivations::is_derivation(&h, &d_zero()).unwrap());
}

#[test]
fn catalog_metrics() {
    let c = cat();
    for e in c.entries() {
        if let Some(b) = &e.metric {
            assert!(b.is_nondegenerate(), "{}", e.name);
            assert!(b.is_ad_invariant(&e.algebra).unwrap().is_pass(), "{}", e.name);
            assert_eq!(b.orth_complement(&derived_algebra(&e.algebra)).unwrap(), center(&e.algebra), "{}", e.name);
        }
    }
}

proptest! {
    #[test]
    fn adjoint_involution_and_skew_commutators(
        xs in proptest::collection::vec(-3i64..=3, 3 * 16),
    ) {
        let (_, b) = metric_of("ext6");
        let n = b.dim();
        let m = |k: usize| Matrix::from_fn(n, n, |i, j| int(xs[(k * 16 + i * n + j) % xs.len()]));
        let (s, t) = (m(0), m(1));
        let adj = b.metric_adjoint(&s).unwrap();
        prop_assert_eq!(b.metric_adjoint(&adj).unwrap(), s.clone());
        for x in 0..n {
            for y in 0..n {
                let (ex, ey) = (unit_vec(n, x), unit_vec(n, y));
                prop_assert_eq!(b.eval(&s.mul_vec(&ex).unwrap(), &ey).unwrap(), b.eval(&ex, &adj.mul_vec(&ey).unwrap()).unwrap());
            }
        }
        // Skew parts commute into skew maps.
        let skew = |a: &Matrix<Rational>| a.sub(&b.metric_adjoint(a).unwrap()).unwrap();
        let (ks, kt) = (skew(&s), skew(&t));
        prop_assert!(b.is_skew(&ks).unwrap() && b.is_skew(&kt).unwrap());
        prop_assert!(b.is_skew(&ks.commutator(&kt).unwrap()).unwrap());
    }
}
