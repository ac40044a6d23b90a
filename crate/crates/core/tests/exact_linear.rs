use nilmetric::linalg::spectral::{eigenspace, minimal_polynomial, rational_eigen, semisimple_part};
use nilmetric::linalg::{Matrix, Subspace};
use nilmetric::{int, rat, Rational};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, prop_oneof![Just(1i64), Just(2), Just(3)]).prop_map(|(n, d)| rat(n, d))
}

fn matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = Matrix<Rational>> {
    (1..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_rational(), r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    proptest::collection::vec(proptest::collection::vec(small_rational(), n), 0..=max)
}

proptest! {
    #[test]
    fn rank_nullity(a in matrix(6, 6)) {
        prop_assert_eq!(a.rank() + a.kernel().dim(), a.cols());
        prop_assert_eq!(a.image().dim(), a.rank());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }

    #[test]
    fn rref_idempotent(a in matrix(6, 6)) {
        let r = a.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.matrix.rank(), a.rank());
    }

    #[test]
    fn kernel_is_annihilated(a in matrix(5, 6)) {
        for v in a.kernel().vectors() {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(|x| *x == int(0)));
        }
    }

    #[test]
    fn grassmann((u, w) in (1usize..=6).prop_flat_map(|n| (vectors(n, n), vectors(n, n)).prop_map(move |p| (n, p)))
        .prop_map(|(n, (u, w))| (Subspace::span(n, &u).unwrap(), Subspace::span(n, &w).unwrap()))) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && u.contains_subspace(&i).unwrap());
    }

    #[test]
    fn subspace_representation_is_canonical(vs in vectors(4, 4), p in matrix(4, 4)) {
        // Rows of p·basis span the same space whenever p is invertible.
        let s = Subspace::span(4, &vs).unwrap();
        let b = s.vectors();
        if b.is_empty() || p.rows() < b.len() {
            return Ok(());
        }
        let k = b.len();
        let q = Matrix::from_fn(k, k, |i, j| p[(i % p.rows(), j % p.cols())].clone()).add(&Matrix::identity(k).scale(&int(7))).unwrap();
        if q.rank() < k {
            return Ok(());
        }
        let mixed: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..4).map(|c| (0..k).map(|j| q[(i, j)].clone() * b[j][c].clone()).sum()).collect())
            .collect();
        prop_assert_eq!(Subspace::span(4, &mixed).unwrap(), s);
    }

    #[test]
    fn jordan_chevalley(a in (1usize..=4).prop_flat_map(|n| proptest::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::from_fn(n, n, |i, j| if j < i { int(0) } else { int(v[i * n + j]) })))) {
        // Upper triangular, so the spectrum is rational.
        let s = semisimple_part(&a).unwrap();
        let nil = a.sub(&s).unwrap();
        prop_assert_eq!(s.commutator(&a).unwrap(), Matrix::zeros(a.rows(), a.rows()));
        prop_assert!(nil.pow(a.rows() as u32).unwrap().is_zero());
        let q = minimal_polynomial(&s).unwrap();
        prop_assert_eq!(q.squarefree_part(), q);
    }
}

#[test]
fn diagonal_eigenspace() {
    let d = Matrix::diagonal(&[int(1), int(1), int(2)]);
    assert_eq!(eigenspace(&d, &int(1)).unwrap().dim(), 2);
}

#[test]
fn nilpotent_block_has_zero_semisimple_part() {
    let j = Matrix::from_fn(3, 3, |i, k| if k == i + 1 { int(1) } else { int(0) });
    assert!(semisimple_part(&j).unwrap().is_zero());
}

#[test]
fn five_distinct_eigenvalues() {
    let ints = [1, 1, 2, 2, 3, 3, 3, 4, 4, 5, 5];
    let d = Matrix::diagonal(&ints.map(|k| rat(33 * k, 119)));
    assert_eq!(minimal_polynomial(&d).unwrap().degree(), Some(5));
    let es = rational_eigen(&d).unwrap();
    assert_eq!(es.iter().map(|e| e.multiplicity).collect::<Vec<_>>(), vec![2, 2, 3, 2, 2]);
}

#[test]
fn irrational_spectrum_is_an_error() {
    let m = Matrix::from_rows(2, &[vec![int(0), int(2)], vec![int(1), int(0)]]).unwrap();
    assert!(rational_eigen(&m).is_err());
}

#[test]
fn inverse_and_determinant() {
    let m = Matrix::from_rows(2, &[vec![int(2), int(1)], vec![int(1), int(1)]]).unwrap();
    assert_eq!(m.determinant().unwrap(), int(1));
    assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
    assert!(Matrix::<Rational>::zeros(2, 2).inverse().is_err());
}
