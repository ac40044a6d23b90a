use crate::error::Result;
use crate::field::Field;
use crate::lie::{GradedLieAlgebra, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::metric::{BilinearForm, MetricLieAlgebra};

/// Cotangent `T*g = g ⋉ g*` in the basis `(e_1..e_n, e^1..e^n)`, with
/// `[X, α] = -α ∘ ad X` and the pairing metric `g(X + α, Y + β) = α(Y) + β(X)`.
pub fn cotangent<F: Field>(g: &LieAlgebra<F>) -> MetricLieAlgebra<F> {
    let n = g.dim();
    let mut entries = g.entries();
    for (i, k, terms) in g.nonzero_brackets() {
        for (j, c) in terms {
            // [e_i, e^j] has e^k-coefficient -c_ik^j, and [e_k, e^j] has
            // e^i-coefficient -c_ki^j = c_ik^j.
            entries.push((i, n + j, n + k, -c.clone()));
            entries.push((k, n + j, n + i, c.clone()));
        }
    }
    let algebra = LieAlgebra::from_brackets_unchecked(2 * n, entries).expect("indices in range");
    let mut gram = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        gram[(i, n + i)] = F::one();
        gram[(n + i, i)] = F::one();
    }
    let metric = BilinearForm::new(gram).expect("symmetric");
    MetricLieAlgebra { algebra, metric }
}

/// Projection of `T*g` onto `g*` along `g`.
pub fn dual_projection<F: Field>(n: usize) -> Matrix<F> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| if i == j && i >= n { F::one() } else { F::zero() })
}

/// Grading of `T*g` for `g = W_1 ⊕ … ⊕ W_s` graded by the given block sizes:
/// `W_i` in degree `i`, `W_i*` in degree `2s + 1 - i`.
pub fn cotangent_grading<F: Field>(t: &LieAlgebra<F>, sizes: &[usize]) -> Result<GradedLieAlgebra<F>> {
    let n: usize = sizes.iter().sum();
    let s = sizes.len() as u32;
    let mut layers = Vec::new();
    let mut off = 0;
    for (i, &sz) in sizes.iter().enumerate() {
        let idx: Vec<usize> = (off..off + sz).collect();
        let dual: Vec<usize> = idx.iter().map(|k| k + n).collect();
        let deg = i as u32 + 1;
        layers.push((deg, Subspace::coordinate(2 * n, &idx)?));
        layers.push((2 * s + 1 - deg, Subspace::coordinate(2 * n, &dual)?));
        off += sz;
    }
    layers.sort_by_key(|(d, _)| *d);
    GradedLieAlgebra::new(t.clone(), layers)
}
