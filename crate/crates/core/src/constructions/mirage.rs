use crate::error::{Error, Result};
use crate::field::{is_zero_vec, Field};
use crate::lie::{bracket_subspaces, center, centralizer, derived, derived_algebra, ideal_generated, largest_ideal_in};
use crate::linalg::{Matrix, Subspace};
use crate::metric::MetricLieAlgebra;

/// An injective linear map `ι: h → g` between metric Lie algebras, given by
/// the matrix whose column `j` is `ι(e_j)`.
#[derive(Clone, Debug)]
pub struct MirageWitness<F> {
    pub source: MetricLieAlgebra<F>,
    pub target: MetricLieAlgebra<F>,
    pub inclusion: Matrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Pass,
    Fail(String),
}

impl Condition {
    pub fn is_pass(&self) -> bool {
        matches!(self, Condition::Pass)
    }

    fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Condition::Pass
        } else {
            Condition::Fail(why())
        }
    }
}

/// Outcome of the sufficient test for M5: every `I^⊥` lies in `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum M5 {
    /// `bound` is central, so every `I^⊥` is central.
    Central { bound_dim: usize, abelian: bool },
    /// `bound` is not central; the condition is undecided.
    Inconclusive { bound_dim: usize, abelian: bool },
}

impl M5 {
    pub fn is_pass(&self) -> bool {
        matches!(self, M5::Central { .. })
    }

    pub fn is_abelian(&self) -> bool {
        match self {
            M5::Central { abelian, .. } | M5::Inconclusive { abelian, .. } => *abelian,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirageReport {
    pub m1: Condition,
    pub m2: Condition,
    pub m3: Condition,
    pub m4: Condition,
    pub m5: M5,
}

impl MirageReport {
    pub fn m1_to_m4(&self) -> bool {
        self.m1.is_pass() && self.m2.is_pass() && self.m3.is_pass() && self.m4.is_pass()
    }

    pub fn all_pass(&self) -> bool {
        self.m1_to_m4() && self.m5.is_pass()
    }
}

impl<F: Field> MirageWitness<F> {
    pub fn new(source: MetricLieAlgebra<F>, target: MetricLieAlgebra<F>, inclusion: Matrix<F>) -> Result<Self> {
        if inclusion.rows() != target.dim() || inclusion.cols() != source.dim() {
            return Err(Error::DimensionMismatch { expected: target.dim(), found: inclusion.rows() });
        }
        if inclusion.rank() != source.dim() {
            return Err(Error::Precondition("inclusion is not injective".into()));
        }
        Ok(MirageWitness { source, target, inclusion })
    }

    /// Inclusion of `h` as the first `dim h` coordinates of `g`.
    pub fn leading(source: MetricLieAlgebra<F>, target: MetricLieAlgebra<F>) -> Result<Self> {
        let (m, n) = (source.dim(), target.dim());
        let inc = Matrix::from_fn(n, m, |i, j| if i == j { F::one() } else { F::zero() });
        Self::new(source, target, inc)
    }

    fn push(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        s.image_under(&self.inclusion)
    }
}

pub fn mirage_check<F: Field>(w: &MirageWitness<F>) -> Result<MirageReport> {
    let (h, g) = (&w.source.algebra, &w.target.algebra);
    let iota = &w.inclusion;
    let ih = iota.column_vecs();

    // M1: ι^T G ι = H
    let pulled = iota.transpose().mul(w.target.metric.gram())?.mul(iota)?;
    let m1 = Condition::from_bool(&pulled == w.source.metric.gram(), || "metric is not preserved".into());

    let hd = derived_algebra(h);
    let hd_vecs = hd.vectors();
    let mut m2 = Condition::Pass;
    'outer: for x in &hd_vecs {
        let ix = iota.mul_vec(x)?;
        for (j, iy) in ih.iter().enumerate() {
            let lhs = g.bracket(&ix, iy)?;
            let rhs = iota.mul_vec(&h.bracket(x, &crate::field::unit_vec(h.dim(), j))?)?;
            if lhs != rhs {
                m2 = Condition::Fail(format!("[ι(X), ι(e{})] differs for X = {}", j + 1, crate::io::text::format_vector(x)));
                break 'outer;
            }
        }
    }

    let image = Subspace::span(g.dim(), &ih)?;
    let perp = w.target.metric.orth_complement(&image)?;
    let mut m3 = Condition::Pass;
    'outer3: for x in &hd_vecs {
        let ix = iota.mul_vec(x)?;
        for y in perp.vectors() {
            if !is_zero_vec(&g.bracket(&ix, &y)?) {
                m3 = Condition::Fail(format!("ι({}) does not commute with ι(h)^⊥", crate::io::text::format_vector(x)));
                break 'outer3;
            }
        }
    }

    let gdd = derived(g, 2);
    let hdd = w.push(&derived(h, 2))?;
    let m4 = Condition::from_bool(gdd == hdd, || format!("dim g'' = {}, dim ι(h'') = {}", gdd.dim(), hdd.dim()));

    let m5 = m5_bound(w, &image)?;
    Ok(MirageReport { m1, m2, m3, m4, m5 })
}

/// Shrinks a subspace known to contain `I^⊥` for every nondegenerate ideal
/// `I ⊇ ι(h)`. Such `I` contain the ideal `J` generated by what is already
/// forced, and `I^⊥` is an ideal inside `J^⊥ ∩ C(J)`. Since `I ∩ I^⊥ = 0`,
/// `I^⊥` also centralizes every `y` with `[bound, y] ⊆ J`.
fn m5_bound<F: Field>(w: &MirageWitness<F>, image: &Subspace<F>) -> Result<M5> {
    let g = &w.target.algebra;
    let b = &w.target.metric;
    let n = g.dim();
    let mut forced = ideal_generated(g, image)?;
    let mut bound = Subspace::full(n);
    loop {
        let mut s = bound.intersect(&b.orth_complement(&forced)?)?.intersect(&centralizer(g, &forced)?)?;
        let mut y = Subspace::full(n);
        for v in s.vectors() {
            y = y.intersect(&forced.preimage_under(&g.ad(&v)?)?)?;
        }
        s = s.intersect(&centralizer(g, &y)?)?;
        let s = largest_ideal_in(g, &s)?;
        let next = ideal_generated(g, &forced.sum(&b.orth_complement(&s)?)?)?;
        if next == forced && s == bound {
            break;
        }
        forced = next;
        bound = s;
    }
    let central = center(g).contains_subspace(&bound)?;
    let abelian = bracket_subspaces(g, &bound, &bound)?.is_zero();
    let bound_dim = bound.dim();
    Ok(if central { M5::Central { bound_dim, abelian } } else { M5::Inconclusive { bound_dim, abelian } })
}
