use nilmetric::catalog::Catalog;
use nilmetric::constructions::{cotangent, cotangent_grading};
use nilmetric::field::{add_vec, is_zero_vec, scale_vec, unit_vec};
use nilmetric::free::build;
use nilmetric::io::text::parse_algebra;
use nilmetric::lie::{
    center, centralizer, derived_algebra, dims, is_ideal, lcs, quotient, split_abelian_factor, ucs,
    GradedLieAlgebra, LieAlgebra,
};
use nilmetric::linalg::Subspace;
use nilmetric::{int, rat, Rational};
use proptest::prelude::*;

fn cat() -> Catalog {
    Catalog::builtin().unwrap()
}

fn e(n: usize, i: usize) -> Vec<Rational> {
    unit_vec(n, i - 1)
}

/// Jacobiator summed over all basis triples, computed only through `bracket`.
fn naive_jacobi_defect(g: &LieAlgebra<Rational>) -> bool {
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
                let a = g.bracket(&x, &g.bracket(&y, &z).unwrap()).unwrap();
                let b = g.bracket(&y, &g.bracket(&z, &x).unwrap()).unwrap();
                let c = g.bracket(&z, &g.bracket(&x, &y).unwrap()).unwrap();
                if !is_zero_vec(&add_vec(&add_vec(&a, &b), &c)) {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn g11_first_bracket() {
    let c = cat();
    let g = &c.load("g11").unwrap().algebra;
    assert_eq!(g.bracket(&e(11, 1), &e(11, 2)).unwrap(), e(11, 3));
}

#[test]
fn free_first_bracket() {
    let f = build(2, 5).unwrap();
    assert_eq!(f.lie().bracket(&e(14, 2), &e(14, 1)).unwrap(), e(14, 3));
}

#[test]
fn bracket_dimension_mismatch() {
    let g = LieAlgebra::<Rational>::abelian(3);
    assert!(g.bracket(&e(2, 1), &e(3, 1)).is_err());
}

#[test]
fn jacobi_on_abelian_and_h12() {
    assert!(LieAlgebra::<Rational>::abelian(5).jacobi_check().is_pass());
    assert!(cat().load("h12").unwrap().algebra.jacobi_check().is_pass());
}

#[test]
fn perturbed_h12_breaks_jacobi() {
    let c = cat();
    let text = c.load("h12").unwrap().text.replace("d e4 = e1^e2", "d e4 = -e1^e2");
    let g = parse_algebra(&text).unwrap().to_algebra(false).unwrap();
    assert_eq!(g.constant(0, 1, 3), int(1));
    assert!(!g.jacobi_check().is_pass());
    assert!(naive_jacobi_defect(&g));
    assert!(parse_algebra(&text).unwrap().to_algebra(true).is_err());
    assert!(!naive_jacobi_defect(&c.load("h12").unwrap().algebra));
}

#[test]
fn n9_series() {
    let c = cat();
    let n = &c.load("n9").unwrap().algebra;
    assert_eq!(dims(&lcs(n)), vec![9, 6, 5, 3, 2, 1, 0]);
    assert_eq!(dims(&ucs(n)), vec![1, 3, 4, 6, 7, 9]);
}

#[test]
fn abelian_series() {
    let a = LieAlgebra::<Rational>::abelian(4);
    assert!(center(&a).is_full());
    assert_eq!(dims(&lcs(&a)), vec![4, 0]);
}

#[test]
fn centralizers() {
    let c = cat();
    let g = &c.load("g11").unwrap().algebra;
    let z = center(g);
    assert!(centralizer(g, &z).unwrap().is_full());
    let c3 = centralizer(g, &Subspace::span(11, &[e(11, 3)]).unwrap()).unwrap();
    assert!(c3.contains(&e(11, 5)).unwrap());

    let f = build(2, 2).unwrap();
    let w1 = Subspace::coordinate(3, &[0, 1]).unwrap();
    let c1 = centralizer(f.lie(), &Subspace::span(3, &[e(3, 1)]).unwrap()).unwrap();
    assert_eq!(c1.intersect(&w1).unwrap(), Subspace::span(3, &[e(3, 1)]).unwrap());
}

#[test]
fn h12_mod_center_is_n9() {
    let c = cat();
    let h = &c.load("h12").unwrap().algebra;
    let q = quotient(h, &center(h)).unwrap();
    assert_eq!(q.algebra, c.load("n9").unwrap().algebra);
}

#[test]
fn quotient_by_everything() {
    let c = cat();
    let g = &c.load("g11").unwrap().algebra;
    assert_eq!(quotient(g, &Subspace::full(11)).unwrap().algebra.dim(), 0);
    let not_ideal = Subspace::span(11, &[e(11, 1)]).unwrap();
    assert!(quotient(g, &not_ideal).is_err());
}

#[test]
fn quotients_are_homomorphic_images() {
    let c = cat();
    for entry in c.entries() {
        let g = &entry.algebra;
        let n = g.dim();
        for ideal in ucs(g).iter().chain(lcs(g).iter()) {
            assert!(is_ideal(g, ideal).unwrap());
            let q = quotient(g, ideal).unwrap();
            assert_eq!(q.algebra.dim(), n - ideal.dim());
            assert!(q.algebra.jacobi_check().is_pass());
            for i in 0..n {
                for j in 0..n {
                    let lhs = q.projection.mul_vec(&g.bracket_basis(i, j)).unwrap();
                    let pi = q.projection.mul_vec(&unit_vec(n, i)).unwrap();
                    let pj = q.projection.mul_vec(&unit_vec(n, j)).unwrap();
                    assert_eq!(lhs, q.algebra.bracket(&pi, &pj).unwrap(), "{}", entry.name);
                }
            }
        }
    }
}

#[test]
fn direct_sum_with_abelian() {
    let c = cat();
    let g = &c.load("g11").unwrap().algebra;
    let s = g.direct_sum(&LieAlgebra::abelian(2));
    assert_eq!(s.dim(), 13);
    let mut expected = dims(&lcs(g));
    expected[0] += 2;
    assert_eq!(dims(&lcs(&s)), expected);

    let (ideal, ab) = split_abelian_factor(&g.direct_sum(&LieAlgebra::abelian(3)));
    assert_eq!((ideal.dim(), ab.dim()), (11, 3));
    let (_, none) = split_abelian_factor(g);
    assert_eq!(none.dim(), 0);
}

#[test]
fn metric_entries_split_center_and_derived() {
    let c = cat();
    for entry in c.entries().filter(|e| e.metric.is_some()) {
        let g = &entry.algebra;
        assert_eq!(center(g).dim() + derived_algebra(g).dim(), g.dim(), "{}", entry.name);
    }
}

#[test]
fn series_are_monotone() {
    let c = cat();
    for entry in c.entries() {
        let l = dims(&lcs(&entry.algebra));
        let u = dims(&ucs(&entry.algebra));
        assert!(l.windows(2).all(|w| w[0] > w[1]), "{}", entry.name);
        assert!(u.windows(2).all(|w| w[0] < w[1]), "{}", entry.name);
        assert_eq!(l.last(), Some(&0));
        assert_eq!(u.last(), Some(&entry.algebra.dim()));
    }
}

#[test]
fn gradings() {
    let f = build(2, 5).unwrap();
    assert!(f.algebra.check().is_pass());
    let flat = GradedLieAlgebra::from_block_sizes(f.lie().clone(), &[14]).unwrap();
    assert!(!flat.check().is_pass());
    let f22 = build(2, 2).unwrap();
    let t = cotangent(f22.lie());
    let g = cotangent_grading(&t.algebra, &[2, 1]).unwrap();
    assert_eq!(g.layers.iter().map(|(d, s)| (*d, s.dim())).collect::<Vec<_>>(), vec![(1, 2), (2, 1), (3, 1), (4, 2)]);
    assert!(g.check().is_pass());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn antisymmetric_and_bilinear(
        idx in 0usize..18,
        xs in proptest::collection::vec(-5i64..=5, 3 * 24),
        (a, b) in (-4i64..=4, 1i64..=3),
    ) {
        let c = cat();
        let entries: Vec<_> = c.entries().collect();
        let g = &entries[idx % entries.len()].algebra;
        let n = g.dim();
        let v = |k: usize| -> Vec<Rational> { (0..n).map(|i| rat(xs[k * 24 + i], 1 + (i as i64 % 3))).collect() };
        let (x, y, z) = (v(0), v(1), v(2));
        let s = rat(a, b);
        let lhs = g.bracket(&add_vec(&scale_vec(&x, &s), &y), &z).unwrap();
        let rhs = add_vec(&scale_vec(&g.bracket(&x, &z).unwrap(), &s), &g.bracket(&y, &z).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert!(is_zero_vec(&add_vec(&g.bracket(&x, &y).unwrap(), &g.bracket(&y, &x).unwrap())));
        prop_assert!(is_zero_vec(&g.bracket(&x, &x).unwrap()));
    }
}
