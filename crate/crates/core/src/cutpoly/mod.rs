//! The (±1)-cut polytope `CUT±(G) ⊂ ℝ^E`.
//!
//! Coordinates follow the graph's edge index. A cut vector has `-1` exactly on
//! the edges of its cutset.

mod facets;
mod ineq;
mod oracle;
mod vertices;

use crate::exact::{one, Rat};
use crate::graph::{Cut, Graph};

pub use facets::{facet_system, facets_k5_free, Facet, FacetSource};
pub use ineq::{cycle_inequality, edge_inequalities, hypermetric_inequality, switch, LinIneq};
pub use oracle::{is_facet, is_valid, tight_cut_vectors};
pub use vertices::h_polytope_vertices;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutVector {
    pub cut: Cut,
    pub signs: Vec<i8>,
}

impl CutVector {
    pub fn new(g: &Graph, cut: Cut) -> Self {
        let signs = g
            .edges()
            .iter()
            .map(|e| if cut.contains(e.lo()) != cut.contains(e.hi()) { -1 } else { 1 })
            .collect();
        CutVector { cut, signs }
    }

    pub fn to_rat(&self) -> Vec<Rat> {
        self.signs.iter().map(|&s| crate::exact::rat(s.into())).collect()
    }

    pub fn negatives(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }
}

/// One cut vector per complementary pair of cuts, `2^{p-1}` in all, ordered by
/// the bitmask of `U ⊆ {2, …, p}`.
pub fn all_cut_vectors(g: &Graph) -> Vec<CutVector> {
    let p = g.order();
    assert!(p <= 32, "cut enumeration is limited to 32 vertices, got {p}");
    if p == 0 {
        return Vec::new();
    }
    (0..1u64 << (p - 1))
        .map(|mask| CutVector::new(g, Cut::from_mask(p, mask)))
        .collect()
}

/// `x ↦ 1 − 2x`: from the 0/1 cut polytope to the ±1 one.
pub fn zero_one_to_pm(x: &[Rat]) -> Vec<Rat> {
    x.iter().map(|v| one() - v - v).collect()
}

/// `y ↦ (1 − y)/2`, inverse of [`zero_one_to_pm`].
pub fn pm_to_zero_one(y: &[Rat]) -> Vec<Rat> {
    let half = crate::exact::ratio(1, 2);
    y.iter().map(|v| (one() - v) * &half).collect()
}
