use crate::error::{Error, Result};
use crate::lie::{center, centralizer, derived_algebra, GradedLieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::Rational;

/// Outcome of the condition on subspaces `V ⊆ g_1` with `g_1 ⊆ V + C(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FirstLayer {
    /// `X ∧ Y ↦ [X, Y]` is injective on `Λ²g_1`, so `C(X) ∩ g_1 = ⟨X⟩` for
    /// every nonzero `X ∈ g_1`.
    Holds,
    /// A proper nonzero `V` spanned by basis vectors of `g_1` with
    /// `g_1 ⊆ V + C(V)`.
    Fails(Subspace<Rational>),
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub first_layer: FirstLayer,
    /// Degrees `k` with `g_k ⊄ z(g)` and `g_k ∩ C(g_1) ≠ 0`.
    pub commuting_layers: Vec<u32>,
    pub center_in_derived: bool,
}

impl IrreducibilityReport {
    pub fn is_irreducible(&self) -> bool {
        self.first_layer == FirstLayer::Holds && self.commuting_layers.is_empty() && self.center_in_derived
    }
}

const SUBSET_LIMIT: usize = 12;

pub fn graded_irreducibility(gr: &GradedLieAlgebra<Rational>) -> Result<IrreducibilityReport> {
    if !gr.check().is_pass() {
        return Err(Error::Precondition("invalid grading".into()));
    }
    let g = &gr.algebra;
    let g1 = gr.layer(1).ok_or_else(|| Error::Precondition("no layer of degree 1".into()))?;
    let z = center(g);
    let c1 = centralizer(g, g1)?;
    let mut commuting_layers = Vec::new();
    for (d, layer) in &gr.layers {
        if !z.contains_subspace(layer)? && !layer.intersect(&c1)?.is_zero() {
            commuting_layers.push(*d);
        }
    }
    let center_in_derived = derived_algebra(g).contains_subspace(&z)?;
    Ok(IrreducibilityReport { first_layer: first_layer(gr, g1)?, commuting_layers, center_in_derived })
}

fn first_layer(gr: &GradedLieAlgebra<Rational>, g1: &Subspace<Rational>) -> Result<FirstLayer> {
    let g = &gr.algebra;
    let vs = g1.vectors();
    let m = vs.len();
    let mut cols = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            cols.push(g.bracket(&vs[a], &vs[b])?);
        }
    }
    if cols.is_empty() || Matrix::from_columns(g.dim(), &cols)?.rank() == cols.len() {
        return Ok(if m <= 1 { FirstLayer::Undecided } else { FirstLayer::Holds });
    }
    if m > SUBSET_LIMIT {
        return Ok(FirstLayer::Undecided);
    }
    // C(V) is graded for V ⊆ g_1, so g_1 ⊆ V + C(V) iff g_1 = V + (C(V) ∩ g_1).
    for mask in 1..(1usize << m) - 1 {
        let picked: Vec<Vec<Rational>> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
        let v = Subspace::span(g.dim(), &picked)?;
        let cv = centralizer(g, &v)?.intersect(g1)?;
        if v.sum(&cv)? == *g1 {
            return Ok(FirstLayer::Fails(v));
        }
    }
    Ok(FirstLayer::Undecided)
}
