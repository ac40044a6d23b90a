use crate::error::{Error, Result};
use crate::field::Field;
use crate::lie::algebra::LieAlgebra;
use crate::linalg::Subspace;

/// A Lie algebra with a decomposition into layers of positive degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieAlgebra<F> {
    pub algebra: LieAlgebra<F>,
    pub layers: Vec<(u32, Subspace<F>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingReport<F> {
    Pass,
    /// The layers do not form a direct sum decomposition of the algebra.
    NotDirect { total_dim: usize, span_dim: usize },
    /// `[x, y]` with `x` in layer `a`, `y` in layer `b` leaves layer
    /// `deg a + deg b`.
    Bracket { a: usize, b: usize, value: Vec<F> },
    RepeatedDegree(u32),
    ZeroDegree,
}

impl<F> GradingReport<F> {
    pub fn is_pass(&self) -> bool {
        matches!(self, GradingReport::Pass)
    }
}

impl<F: Field> GradedLieAlgebra<F> {
    pub fn new(algebra: LieAlgebra<F>, layers: Vec<(u32, Subspace<F>)>) -> Result<Self> {
        for (_, s) in &layers {
            if s.ambient_dim() != algebra.dim() {
                return Err(Error::DimensionMismatch { expected: algebra.dim(), found: s.ambient_dim() });
            }
        }
        Ok(GradedLieAlgebra { algebra, layers })
    }

    /// Grading by consecutive coordinate blocks of the given sizes, with
    /// degrees `1, 2, …`.
    pub fn from_block_sizes(algebra: LieAlgebra<F>, sizes: &[usize]) -> Result<Self> {
        let total: usize = sizes.iter().sum();
        if total != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), found: total });
        }
        let mut start = 0;
        let mut layers = Vec::new();
        for (d, &s) in sizes.iter().enumerate() {
            let idx: Vec<usize> = (start..start + s).collect();
            layers.push((d as u32 + 1, Subspace::coordinate(algebra.dim(), &idx)?));
            start += s;
        }
        Self::new(algebra, layers)
    }

    pub fn layer(&self, degree: u32) -> Option<&Subspace<F>> {
        self.layers.iter().find(|(d, _)| *d == degree).map(|(_, s)| s)
    }

    pub fn max_degree(&self) -> u32 {
        self.layers.iter().map(|(d, _)| *d).max().unwrap_or(0)
    }

    pub fn check(&self) -> GradingReport<F> {
        let n = self.algebra.dim();
        let mut seen = std::collections::BTreeSet::new();
        for (d, _) in &self.layers {
            if *d == 0 {
                return GradingReport::ZeroDegree;
            }
            if !seen.insert(*d) {
                return GradingReport::RepeatedDegree(*d);
            }
        }
        let total: usize = self.layers.iter().map(|(_, s)| s.dim()).sum();
        let mut span = Subspace::zero(n);
        for (_, s) in &self.layers {
            span = span.sum(s).expect("ambient");
        }
        if total != n || span.dim() != n {
            return GradingReport::NotDirect { total_dim: total, span_dim: span.dim() };
        }
        for (a, (da, sa)) in self.layers.iter().enumerate() {
            for (b, (db, sb)) in self.layers.iter().enumerate().skip(a) {
                let target = self.layer(da + db);
                for x in sa.vectors() {
                    for y in sb.vectors() {
                        let v = self.algebra.bracket(&x, &y).expect("ambient");
                        let ok = match target {
                            Some(t) => t.contains(&v).expect("ambient"),
                            None => crate::field::is_zero_vec(&v),
                        };
                        if !ok {
                            return GradingReport::Bracket { a, b, value: v };
                        }
                    }
                }
            }
        }
        GradingReport::Pass
    }

    /// The derivation acting as `deg` on each layer, as a matrix.
    pub fn degree_derivation(&self) -> crate::linalg::Matrix<F> {
        let n = self.algebra.dim();
        let mut vecs = Vec::new();
        let mut imgs = Vec::new();
        for (d, s) in &self.layers {
            let f = F::from_i64(i64::from(*d));
            for v in s.vectors() {
                imgs.push(crate::field::scale_vec(&v, &f));
                vecs.push(v);
            }
        }
        // D B = B diag(deg) with B the basis matrix in columns
        let b = crate::linalg::Matrix::from_columns(n, &vecs).expect("ambient");
        let bd = crate::linalg::Matrix::from_columns(n, &imgs).expect("ambient");
        bd.mul(&b.inverse().expect("layers form a basis")).expect("square")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn heisenberg_grading() {
        let g = LieAlgebra::from_brackets(3, [(0, 1, 2, Rational::from_i64(1))]).unwrap();
        let gr = GradedLieAlgebra::from_block_sizes(g.clone(), &[2, 1]).unwrap();
        assert!(gr.check().is_pass());
        let flat = GradedLieAlgebra::from_block_sizes(g, &[3]).unwrap();
        assert!(matches!(flat.check(), GradingReport::Bracket { .. }));
    }
}
