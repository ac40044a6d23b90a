//! Incremental elimination for large sparse homogeneous systems.

use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse row as `(column, value)` pairs sorted by column.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Keeps an echelon basis of the rows seen so far, keyed by pivot column.
/// Each stored row has a unit entry at its pivot and nothing to the left.
#[derive(Clone, Debug)]
pub struct SparseEliminator<F> {
    cols: usize,
    rows: BTreeMap<usize, SparseRow<F>>,
}

fn sub_scaled<F: Field>(row: &BTreeMap<usize, F>, s: &F, other: &[(usize, F)]) -> BTreeMap<usize, F> {
    let mut out = row.clone();
    for (c, x) in other {
        let e = out.entry(*c).or_insert_with(F::zero);
        *e = e.clone() - s.clone() * x.clone();
        if e.is_zero() {
            out.remove(c);
        }
    }
    out
}

impl<F: Field> SparseEliminator<F> {
    pub fn new(cols: usize) -> Self {
        SparseEliminator { cols, rows: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored basis and keep the remainder if it is
    /// nonzero. Returns whether the rank grew.
    pub fn push(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let mut cur: BTreeMap<usize, F> = BTreeMap::new();
        for (c, x) in row {
            debug_assert!(c < self.cols);
            let e = cur.entry(c).or_insert_with(F::zero);
            *e = e.clone() + x;
        }
        cur.retain(|_, x| !x.is_zero());
        let mut cursor = 0;
        loop {
            let hit = cur
                .range(cursor..)
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            match hit {
                Some((c, x)) => {
                    cur = sub_scaled(&cur, &x, &self.rows[&c]);
                    cursor = c + 1;
                }
                None => break,
            }
        }
        let Some((&lead, lx)) = cur.iter().next() else {
            return false;
        };
        let inv = lx.inv();
        let stored: SparseRow<F> = cur.iter().map(|(c, x)| (*c, x.clone() * inv.clone())).collect();
        self.rows.insert(lead, stored);
        true
    }

    fn fully_reduced(&self) -> BTreeMap<usize, BTreeMap<usize, F>> {
        let mut done: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut cur: BTreeMap<usize, F> = row.iter().cloned().collect();
            let targets: Vec<(usize, F)> = cur
                .iter()
                .filter(|(c, _)| **c != p && done.contains_key(c))
                .map(|(c, x)| (*c, x.clone()))
                .collect();
            for (c, x) in targets {
                let other: Vec<(usize, F)> = done[&c].iter().map(|(a, b)| (*a, b.clone())).collect();
                cur = sub_scaled(&cur, &x, &other);
            }
            done.insert(p, cur);
        }
        done
    }

    /// Basis of the null space, one vector per free column in increasing
    /// order, each with a one at its free column.
    pub fn kernel(&self) -> Vec<SparseRow<F>> {
        let reduced = self.fully_reduced();
        let mut by_free: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (&p, row) in &reduced {
            for (&c, x) in row {
                if c != p {
                    by_free.entry(c).or_default().push((p, -x.clone()));
                }
            }
        }
        (0..self.cols)
            .filter(|c| !self.rows.contains_key(c))
            .map(|f| {
                let mut v = by_free.remove(&f).unwrap_or_default();
                v.push((f, F::one()));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::Matrix;
    use crate::Rational;
    use num_traits::Zero;

    #[test]
    fn kernel_agrees_with_dense() {
        let rows: Vec<Vec<i64>> = vec![vec![1, 2, 0, -1, 3], vec![0, 0, 1, 1, 1], vec![2, 4, 1, -1, 7]];
        let mut el = SparseEliminator::new(5);
        for r in &rows {
            el.push(r.iter().enumerate().map(|(c, &x)| (c, Rational::from_i64(x))));
        }
        let dense = Matrix::from_rows(
            5,
            &rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(el.rank(), dense.rank());
        let ker = el.kernel();
        assert_eq!(ker.len(), 3);
        for v in ker {
            let mut d = vec![Rational::zero(); 5];
            for (c, x) in v {
                d[c] = x;
            }
            assert!(dense.mul_vec(&d).unwrap().iter().all(Zero::is_zero));
        }
    }
}
