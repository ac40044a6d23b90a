use std::sync::Arc;

use nilmetric::constructions::cotangent;
use nilmetric::derivations::nikolayevsky;
use nilmetric::free::{
    build, build_cached, cotangent_eigen_equation, cotangent_eigen_sum, cotangent_factor, eigenspace_bound,
    estimate_check, free_lambda, layers, niceness_verdict, nikolayevsky_free, witt_dim, HallTree, NonniceReason,
    Verdict,
};
use nilmetric::lie::{derived_algebra, quotient};
use nilmetric::linalg::{Matrix, Subspace};
use nilmetric::{int, rat, Rational};

fn mobius(n: u64) -> i64 {
    let (mut n, mut p, mut sign) = (n, 2, 1);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        -sign
    } else {
        sign
    }
}

/// Necklace count `(1/k) Σ_{d | k} μ(d) m^{k/d}`.
fn necklace(m: u64, k: u64) -> u64 {
    let s: i128 = (1..=k).filter(|d| k.is_multiple_of(*d)).map(|d| mobius(d) as i128 * (m as i128).pow((k / d) as u32)).sum();
    (s / k as i128) as u64
}

#[test]
fn witt_matches_necklace_formula_and_recurrence() {
    for m in 2..=6u64 {
        for k in 1..=12u64 {
            assert_eq!(witt_dim(m, k), necklace(m, k), "d_{m}({k})");
            let lower: u64 = (1..k).filter(|l| k % l == 0).map(|l| l * witt_dim(m, l)).sum();
            assert_eq!(k * witt_dim(m, k) + lower, m.pow(k as u32));
        }
    }
}

#[test]
fn witt_small_values() {
    assert_eq!((1..=5).map(|k| witt_dim(2, k)).collect::<Vec<_>>(), vec![2, 1, 2, 3, 6]);
    for m in 2..=6u64 {
        assert_eq!(witt_dim(m, 1), m);
        assert_eq!(witt_dim(m, 3), m * (m * m - 1) / 3);
    }
}

/// `[e_a, e_b] = e_c`, 1-based, for the Hall basis of `n_{2,5}`.
const TABLE: [(usize, usize, usize); 12] = [
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

#[test]
fn hall_basis_of_n25() {
    let f = build(2, 5).unwrap();
    assert_eq!(f.dim(), 14);
    assert_eq!(f.layer_dims, vec![2, 1, 2, 3, 6]);
    let g = f.lie();
    for (a, b, c) in TABLE {
        assert_eq!(g.bracket_basis_sparse(a - 1, b - 1), vec![(c - 1, int(1))], "[e{a},e{b}]");
    }
    assert_eq!(f.hall_basis[12].tree.to_string(), "[[[e2,e1],e1],[e2,e1]]");
    assert!(g.jacobi_check().is_pass());
    assert!(f.algebra.check().is_pass());
}

fn degree(t: &HallTree) -> usize {
    match t {
        HallTree::Generator(_) => 1,
        HallTree::Bracket(a, b) => degree(a) + degree(b),
    }
}

#[test]
fn hall_set_conditions() {
    for (m, s) in [(2, 6), (3, 4), (4, 3)] {
        let f = build(m, s).unwrap();
        for (i, w) in f.hall_basis.iter().enumerate() {
            assert_eq!(w.hall_index, i);
            assert_eq!(w.degree, degree(&w.tree));
            if let Some((a, b)) = w.factors {
                assert!(a > b);
                if let Some((_, d)) = f.hall_basis[a].factors {
                    assert!(b >= d);
                }
                let want = HallTree::Bracket(Box::new(f.hall_basis[a].tree.clone()), Box::new(f.hall_basis[b].tree.clone()));
                assert_eq!(w.tree, want);
                assert_eq!(f.lie().bracket_basis_sparse(b, a), vec![(i, int(-1))]);
            }
        }
        assert!(f.hall_basis.windows(2).all(|p| p[0].degree <= p[1].degree));
        assert_eq!(f.layer_dims.iter().sum::<usize>(), f.dim());
    }
}

#[test]
fn small_free_algebras() {
    assert!(build(2, 1).unwrap().lie().is_abelian());
    let f = build(3, 2).unwrap();
    assert_eq!(f.dim(), 6);
    assert_eq!(derived_algebra(f.lie()), Subspace::coordinate(6, &[3, 4, 5]).unwrap());
    assert!(build(1, 3).is_err());
    assert!(build(2, 0).is_err());
}

#[test]
fn top_layer_quotient() {
    for (m, s) in [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4)] {
        let f = build(m, s).unwrap();
        let top = layers(&f).pop().unwrap();
        let q = quotient(f.lie(), &top).unwrap();
        assert_eq!(&q.algebra, build(m, s - 1).unwrap().lie(), "({m},{s})");
    }
}

#[test]
fn cache_shares_instances() {
    let a = build_cached(2, 4).unwrap();
    let b = build_cached(2, 4).unwrap();
    assert!(Arc::ptr_eq(&a, &b));
}

#[test]
fn lambda_closed_forms() {
    for m in 2..=5 {
        let mi = m as i64;
        assert_eq!(free_lambda(m, 2), rat(mi, 2 * mi - 1));
        assert_eq!(free_lambda(m, 3), rat(mi * mi + mi - 1, 3 * mi * mi + 2 * mi - 4));
    }
}

#[test]
fn free_nikolayevsky() {
    let r = nikolayevsky_free(2, 5).unwrap();
    let l = free_lambda(2, 5);
    assert!(l > int(0));
    let got: Vec<(Rational, usize)> = r.spectrum().0;
    assert_eq!(got, [1, 2, 3, 4, 5].iter().zip([2, 1, 2, 3, 6]).map(|(k, d)| (&l * int(*k), d)).collect::<Vec<_>>());
    for (m, s) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let fast = nikolayevsky_free(m, s).unwrap();
        let slow = nikolayevsky(build(m, s).unwrap().lie()).unwrap();
        assert_eq!(fast.endo, slow.endo, "({m},{s})");
        assert_eq!(fast.der_dim, slow.der_dim, "({m},{s})");
    }
}

#[test]
fn estimate() {
    assert!(estimate_check(2, 4).unwrap());
    assert!(estimate_check(2, 5).unwrap());
    assert!(estimate_check(2, 3).is_err());
    for m in 2..=6 {
        for s in 4..=12 {
            assert!(estimate_check(m, s).unwrap(), "({m},{s})");
        }
    }
}

#[test]
fn cotangent_eigen_equation_has_no_solution() {
    for m in 2..=5 {
        for s in 3..=8 {
            for n in 1..=s {
                assert!(!cotangent_eigen_equation(m, s, n).unwrap(), "({m},{s},{n})");
            }
        }
    }
    assert!(cotangent_eigen_equation(2, 3, 0).is_err());
    assert!(cotangent_eigen_equation(2, 3, 4).is_err());
    // d_2 = (2,1,2): 1*2*(2-2) + 2*1*(4-2) + 3*2*(6-2) at n = 1
    assert_eq!(cotangent_eigen_sum(2, 3, 1), 28);
}

#[test]
fn verdicts() {
    for (m, s) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 2)] {
        assert!(niceness_verdict(m, s).unwrap().is_nice(), "({m},{s})");
    }
    assert!(matches!(
        niceness_verdict(2, 5).unwrap(),
        Verdict::Nonnice(NonniceReason::PairObstruction { dim_w5: 6, bound: 4 })
    ));
    assert!(matches!(
        niceness_verdict(3, 3).unwrap(),
        Verdict::Nonnice(NonniceReason::EigenspaceBound { m: 3, dim: 8, bound: 7 })
    ));
    assert_eq!(eigenspace_bound(3), 7);
    assert_eq!(eigenspace_bound(4), 16);
}

#[test]
fn cotangent_nikolayevsky_factor() {
    for (m, s) in [(2, 2), (2, 3), (3, 2)] {
        let f = build(m, s).unwrap();
        let n = f.dim();
        let t = cotangent(f.lie());
        let tn = nikolayevsky(&t.algebra).unwrap();
        let ng = nikolayevsky_free(m, s).unwrap().endo;
        // On the basis (e_i, e^i), N - N* + 2P = diag(N, 2 - N^T).
        let target = Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
            (true, true) => ng[(i, j)].clone(),
            (false, false) => {
                let d = if i == j { int(2) } else { int(0) };
                d - ng[(j - n, i - n)].clone()
            }
            _ => int(0),
        });
        let a = &tn.endo[(0, 0)] / &target[(0, 0)];
        assert_eq!(tn.endo, target.scale(&a), "({m},{s})");
        assert!(a > int(0) && a < int(1));
        assert_eq!(cotangent_factor(&tn.endo, &ng, &t.metric).unwrap(), Some(a));
    }
}

#[test]
fn cotangent_first_layer_eigenspace() {
    for (m, s) in [(2, 3), (2, 4), (3, 2), (3, 3)] {
        let f = build(m, s).unwrap();
        let n = f.dim();
        let tn = nikolayevsky(&cotangent(f.lie()).algebra).unwrap();
        let w1: Vec<usize> = (0..m).collect();
        let w1 = Subspace::coordinate(2 * n, &w1).unwrap();
        assert!(tn.eigen.iter().any(|e| e.space == w1), "({m},{s})");
    }
    // λ = 2/3 solves λ(1 + n) = 2 at n = 2, so W_1 merges with W_2*.
    assert!(cotangent_eigen_equation(2, 2, 2).unwrap());
    let tn = nikolayevsky(&cotangent(build(2, 2).unwrap().lie()).algebra).unwrap();
    let merged = Subspace::coordinate(6, &[0, 1, 5]).unwrap();
    assert!(tn.eigen.iter().any(|e| e.space == merged));
}
