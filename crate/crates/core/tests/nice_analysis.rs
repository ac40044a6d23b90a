use nilmetric::catalog::Catalog;
use nilmetric::constructions::{cotangent, cotangent_grading, family_in};
use nilmetric::derivations::Spectrum;
use nilmetric::field::unit_vec;
use nilmetric::free::build;
use nilmetric::lie::{GradedLieAlgebra, LieAlgebra};
use nilmetric::linalg::{Matrix, Subspace};
use nilmetric::nice::deduction::{
    assume_eigenspaces_nice, contradiction_check, nice_bracket, nice_bracket_subspaces, nice_constraint_subspace,
    nice_dim1_promote, nice_intersect, nice_ker_im, nice_sum,
};
use nilmetric::nice::{
    check_nice_basis, eigenspace_bound_obstruction, fingerprint, fingerprint_match, fingerprint_verdict,
    graded_irreducibility, ucs_quotient_test, DeductionState, FirstLayer, NiceCertificate, NiceCheck, NiceViolation,
    UcsVerdict,
};
use nilmetric::{int, rat, Rational};
use proptest::prelude::*;

fn cat() -> Catalog {
    Catalog::builtin().unwrap()
}

fn e(n: usize, i: usize) -> Vec<Rational> {
    unit_vec(n, i - 1)
}

fn nice_algebras() -> Vec<LieAlgebra<Rational>> {
    let n23 = build(2, 3).unwrap().lie().clone();
    let n24 = build(2, 4).unwrap().lie().clone();
    vec![cotangent(&n23).algebra, cotangent(&n24).algebra, n23, n24]
}

fn identity_check(g: &LieAlgebra<Rational>) -> NiceCheck {
    check_nice_basis(&NiceCertificate::new(g.clone(), Matrix::identity(g.dim())).unwrap()).unwrap()
}

#[test]
fn hall_bases_are_nice() {
    for g in nice_algebras() {
        assert!(identity_check(&g).is_pass());
    }
}

#[test]
fn g11_defining_basis_is_not_nice() {
    let c = cat();
    let g = &c.load("g11").unwrap().algebra;
    // [e2,e4] = -1/2 e5 + 1/2 e6 under the differential sign convention.
    let want = NiceViolation::Bracket { i: 1, j: 3, value: vec![
        int(0), int(0), int(0), int(0), rat(-1, 2), rat(1, 2), int(0), int(0), int(0), int(0), int(0),
    ] };
    assert_eq!(identity_check(g), NiceCheck::Witness(want));
}

#[test]
fn abelian_any_basis_is_nice() {
    let p = Matrix::from_rows(3, &[vec![int(1), int(2), int(3)], vec![int(0), int(1), int(4)], vec![int(5), int(6), int(0)]]).unwrap();
    let c = NiceCertificate::new(LieAlgebra::abelian(3), p).unwrap();
    assert!(check_nice_basis(&c).unwrap().is_pass());
    assert!(NiceCertificate::new(LieAlgebra::<Rational>::abelian(2), Matrix::zeros(2, 2)).is_err());
}

#[test]
fn contraction_violation() {
    // [e1,e2] = e4 and [e1,e3] = e4: e1 ⌟ de^4 is not a single dual vector.
    let g = LieAlgebra::from_brackets(4, [(0, 1, 3, int(1)), (0, 2, 3, int(1))]).unwrap();
    assert!(matches!(identity_check(&g), NiceCheck::Witness(NiceViolation::Contraction { i: 0, k: 3, .. })));
}

fn permuted_scaled(n: usize, perm: &[usize], scales: &[i64]) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |i, j| if perm[i] == j { rat(scales[i], 1 + (i as i64 % 2)) } else { int(0) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn niceness_is_invariant_under_permutation_and_rescaling(
        which in 0usize..5,
        seed in proptest::collection::vec(any::<u32>(), 24),
        scales in proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 24),
    ) {
        let c = cat();
        let mut algebras = nice_algebras();
        algebras.push(c.load("g11").unwrap().algebra.clone());
        let g = &algebras[which];
        let n = g.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, seed[i % seed.len()] as usize % (i + 1));
        }
        let p = permuted_scaled(n, &perm, &scales[..]);
        let before = identity_check(g).is_pass();
        let after = check_nice_basis(&NiceCertificate::new(g.clone(), p).unwrap()).unwrap().is_pass();
        prop_assert_eq!(before, after);
    }
}

#[test]
fn eigenspace_bound() {
    let v = eigenspace_bound_obstruction(build(3, 3).unwrap().lie()).unwrap().unwrap();
    assert_eq!((v.space.dim(), v.dim, v.bound), (3, 8, 7));
    let v = eigenspace_bound_obstruction(build(4, 3).unwrap().lie()).unwrap().unwrap();
    assert_eq!((v.space.dim(), v.dim, v.bound), (4, 20, 16));
    assert!(eigenspace_bound_obstruction(&LieAlgebra::abelian(4)).unwrap().is_none());
    assert!(eigenspace_bound_obstruction(build(2, 5).unwrap().lie()).unwrap().is_none());
}

#[test]
fn fingerprints() {
    let c = cat();
    let fp = fingerprint(&c.load("n9").unwrap().algebra).unwrap();
    assert_eq!(fp.dim, 9);
    assert_eq!(fp.lcs_dims, vec![9, 6, 5, 3, 2, 1, 0]);
    assert_eq!(fp.ucs_dims, vec![1, 3, 4, 6, 7, 9]);
    assert!(fp.nik.is_zero());
    assert_eq!(fingerprint_match(&fp, &c).unwrap(), vec!["18a".to_string(), "18b".to_string()]);
    assert!(fingerprint_verdict(&fp, &c).unwrap().is_nonnice());

    let fp = fingerprint(&c.load("ntilde10").unwrap().algebra).unwrap();
    let m = fingerprint_match(&fp, &c).unwrap();
    assert_eq!(m, (1..=10).map(|i| format!("table1:{i}")).collect::<Vec<_>>());
    assert!(fingerprint_verdict(&fp, &c).unwrap().is_nonnice());

    let fp = fingerprint(&LieAlgebra::abelian(3)).unwrap();
    assert_eq!((fp.lcs_dims, fp.ucs_dims), (vec![3, 0], vec![3]));
    assert_eq!(fp.nik, Spectrum::from_values(&[int(1), int(1), int(1)]));
}

#[test]
fn fingerprint_of_a_nice_member_is_not_certified() {
    let c = cat();
    for name in ["18a", "table1:4"] {
        let fp = fingerprint(&c.load(name).unwrap().algebra).unwrap();
        assert!(!fingerprint_verdict(&fp, &c).unwrap().is_nonnice(), "{name}");
    }
}

#[test]
fn abelian_ker_im() {
    let mut st = DeductionState::new(LieAlgebra::abelian(3));
    st.nice_elements.push(e(3, 1));
    let (st, k, i) = nice_ker_im(&st, &e(3, 1)).unwrap();
    assert!(k.is_full() && i.is_zero());
    assert!(st.is_nice_subspace(&Subspace::full(3)));
    assert!(st.is_nice_subspace(&Subspace::zero(3)));
}

#[test]
fn g11_bracket_rule() {
    let c = cat();
    let st = DeductionState::new(c.load("g11").unwrap().algebra.clone());
    let (st, spaces) = assume_eigenspaces_nice(&st).unwrap();
    assert_eq!(spaces[0], Subspace::coordinate(11, &[0, 1]).unwrap());
    assert!(nice_bracket(&st, &e(11, 1), &e(11, 2)).is_err());
    let mut seeded = st.clone();
    seeded.nice_elements.push(e(11, 1));
    seeded.nice_elements.push(e(11, 2));
    let (after, w) = nice_bracket(&seeded, &e(11, 1), &e(11, 2)).unwrap();
    assert_eq!(w, e(11, 3));
    assert!(after.is_nice_element(&e(11, 3)));
    assert!(after.is_nice_element(&[int(0), int(0), int(-4), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(0)]));
    assert!(nice_bracket(&after, &e(11, 1), &e(11, 1)).is_err());
    assert!(nice_dim1_promote(&st, &spaces[0]).is_err());
}

/// Runs random rule applications on a nice algebra whose coordinate basis is
/// nice and whose coordinate vectors are all recorded as nice.
fn random_walk(g: &LieAlgebra<Rational>, picks: &[(u8, usize, usize, usize)]) -> bool {
    let n = g.dim();
    let mut st = DeductionState::new(g.clone());
    st.nice_elements = (0..n).map(|i| unit_vec(n, i)).collect();
    st.nice_subspaces = (0..n).map(|i| Subspace::coordinate(n, &[i]).unwrap()).collect();
    st = assume_eigenspaces_nice(&st).unwrap().0;
    for &(rule, a, b, c) in picks {
        let elems = st.nice_elements.clone();
        let spaces = st.nice_subspaces.clone();
        let (x, y, z) = (&elems[a % elems.len()], &elems[b % elems.len()], &elems[c % elems.len()]);
        let (s, t) = (&spaces[a % spaces.len()], &spaces[b % spaces.len()]);
        let next = match rule % 7 {
            0 => nice_bracket(&st, x, y).map(|r| r.0),
            1 => nice_ker_im(&st, x).map(|r| r.0),
            2 => nice_intersect(&st, s, t).map(|r| r.0),
            3 => nice_sum(&st, s, t).map(|r| r.0),
            4 => nice_dim1_promote(&st, s).map(|r| r.0),
            5 => nice_bracket_subspaces(&st, s, t).map(|r| r.0),
            _ => nice_constraint_subspace(&st, s, z, t).map(|r| r.0),
        };
        if let Ok(next) = next {
            st = next;
        }
        if contradiction_check(&st, x, y, z).unwrap() {
            return false;
        }
    }
    for s in &st.nice_subspaces {
        // Spanned by basis vectors of the nice basis.
        if *s != Subspace::coordinate(n, s.pivots()).unwrap() {
            return false;
        }
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn deduction_is_sound_on_nice_algebras(
        which in 0usize..4,
        picks in proptest::collection::vec((any::<u8>(), any::<usize>(), any::<usize>(), any::<usize>()), 1..40),
    ) {
        let g = &nice_algebras()[which];
        prop_assert!(random_walk(g, &picks));
    }
}

#[test]
fn ucs_quotients() {
    let c = cat();
    let h = &c.load("h12").unwrap().algebra;
    assert!(matches!(ucs_quotient_test(h, &c).unwrap(), UcsVerdict::Nonnice { k: 1, quotient_dim: 9, abelian_dim: 0, .. }));
    for k in 12..=16 {
        let f = family_in(&c, k).unwrap();
        assert!(ucs_quotient_test(&f.algebra.algebra, &c).unwrap().is_nonnice(), "g_{k}");
    }
    assert_eq!(ucs_quotient_test(&LieAlgebra::abelian(4), &c).unwrap(), UcsVerdict::Inconclusive);
}

#[test]
fn ucs_test_never_contradicts_a_nice_basis() {
    let c = cat();
    let mut algebras: Vec<LieAlgebra<Rational>> = c.entries().map(|e| e.algebra.clone()).collect();
    algebras.extend(nice_algebras());
    for g in algebras {
        if identity_check(&g).is_pass() {
            assert!(!ucs_quotient_test(&g, &c).unwrap().is_nonnice());
        }
    }
}

#[test]
fn cotangents_are_irreducible() {
    for (m, s) in [(2, 3), (3, 3)] {
        let f = build(m, s).unwrap();
        let t = cotangent(f.lie());
        let gr = cotangent_grading(&t.algebra, &f.layer_dims).unwrap();
        let r = graded_irreducibility(&gr).unwrap();
        assert!(r.is_irreducible(), "({m},{s})");
    }
}

#[test]
fn two_heisenbergs_are_reducible() {
    let h = build(2, 2).unwrap().lie().clone();
    let g = h.direct_sum(&h);
    let layers = vec![
        (1, Subspace::coordinate(6, &[0, 1, 3, 4]).unwrap()),
        (2, Subspace::coordinate(6, &[2, 5]).unwrap()),
    ];
    let gr = GradedLieAlgebra::new(g, layers).unwrap();
    let r = graded_irreducibility(&gr).unwrap();
    assert!(!r.is_irreducible());
    let FirstLayer::Fails(v) = r.first_layer else {
        panic!("condition (1) should fail");
    };
    let first = Subspace::coordinate(6, &[0, 1]).unwrap();
    let second = Subspace::coordinate(6, &[3, 4]).unwrap();
    assert!(v == first || v == second);

    let bad = GradedLieAlgebra::from_block_sizes(h, &[3]).unwrap();
    assert!(graded_irreducibility(&bad).is_err());
}
