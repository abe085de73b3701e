//! Validity and facet checks against the vertex description of `CUT±(G)`.

use crate::exact::{rat, Matrix};
use crate::graph::Graph;

use super::{all_cut_vectors, CutVector, LinIneq};

/// Every cut vector satisfies the inequality.
pub fn is_valid(g: &Graph, ineq: &LinIneq) -> bool {
    assert_eq!(ineq.dim(), g.edge_count(), "dimension mismatch");
    all_cut_vectors(g)
        .iter()
        .all(|x| ineq.lhs_signs(&x.signs) <= *ineq.rhs())
}

/// Cut vectors attaining equality.
pub fn tight_cut_vectors(g: &Graph, ineq: &LinIneq) -> Vec<CutVector> {
    all_cut_vectors(g)
        .into_iter()
        .filter(|x| ineq.lhs_signs(&x.signs) == *ineq.rhs())
        .collect()
}

/// `CUT±(G)` is full-dimensional, so a valid inequality is facet-defining
/// exactly when its tight cut vectors span an affine space of dimension
/// `|E| − 1`, i.e. the rows `(x, 1)` have rank `|E|`.
pub fn is_facet(g: &Graph, ineq: &LinIneq) -> bool {
    if ineq.is_trivial() || !is_valid(g, ineq) {
        return false;
    }
    let tight = tight_cut_vectors(g, ineq);
    if tight.is_empty() {
        return false;
    }
    let rows = tight
        .iter()
        .map(|x| {
            let mut r = x.to_rat();
            r.push(rat(1));
            r
        })
        .collect();
    Matrix::from_rows(rows).expect("equal lengths").rank() == g.edge_count()
}
