use std::fmt;

use num_traits::{Signed, Zero};

use crate::exact::{format_rat, rat, Rat};
use crate::graph::{Cut, CycleSubgraph, Edge, Graph};
use crate::{Error, Result};

/// `⟨alpha, x⟩ <= rhs` over the edge coordinates of a graph.
///
/// The derived order is lexicographic on `(alpha, rhs)`, which is the order
/// facet lists are reported in. Inequalities are never rescaled; use
/// [`LinIneq::is_positive_multiple_of`] to compare them.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinIneq {
    alpha: Vec<Rat>,
    rhs: Rat,
}

impl fmt::Debug for LinIneq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(format_rat).collect();
        write!(f, "<({}), x> <= {}", a.join(", "), format_rat(&self.rhs))
    }
}

impl LinIneq {
    pub fn new(alpha: Vec<Rat>, rhs: Rat) -> Self {
        LinIneq { alpha, rhs }
    }

    pub fn from_i64(alpha: &[i64], rhs: i64) -> Self {
        LinIneq {
            alpha: alpha.iter().map(|&a| rat(a)).collect(),
            rhs: rat(rhs),
        }
    }

    /// Builds an inequality on `g` from `(edge, coefficient)` pairs; edges not
    /// listed get coefficient zero.
    pub fn from_edges(g: &Graph, coefs: impl IntoIterator<Item = (Edge, Rat)>, rhs: Rat) -> Result<Self> {
        let mut alpha = vec![Rat::zero(); g.edge_count()];
        for (e, c) in coefs {
            let i = g.edge_index(e).ok_or(Error::NotAnEdge { edge: e })?;
            alpha[i] = c;
        }
        Ok(LinIneq { alpha, rhs })
    }

    pub fn alpha(&self) -> &[Rat] {
        &self.alpha
    }

    pub fn rhs(&self) -> &Rat {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha.iter().all(Zero::is_zero)
    }

    /// `⟨alpha, x⟩` for a ±1 vector.
    pub fn lhs_signs(&self, x: &[i8]) -> Rat {
        assert_eq!(x.len(), self.alpha.len(), "dimension mismatch");
        let mut s = Rat::zero();
        for (a, &xi) in self.alpha.iter().zip(x) {
            if xi >= 0 {
                s += a;
            } else {
                s -= a;
            }
        }
        s
    }

    pub fn lhs(&self, x: &[Rat]) -> Rat {
        assert_eq!(x.len(), self.alpha.len(), "dimension mismatch");
        crate::exact::dot(&self.alpha, x)
    }

    /// Whether `other = c · self` with `c > 0`, right-hand side included.
    pub fn is_positive_multiple_of(&self, other: &LinIneq) -> bool {
        if self.alpha.len() != other.alpha.len() {
            return false;
        }
        let Some(k) = self.alpha.iter().position(|a| !a.is_zero()) else {
            return other.is_trivial() && self.rhs.signum() == other.rhs.signum();
        };
        let c = &other.alpha[k] / &self.alpha[k];
        c.is_positive()
            && self.alpha.iter().zip(&other.alpha).all(|(a, b)| a * &c == *b)
            && &self.rhs * &c == other.rhs
    }
}

/// `Σ_{E(C)∖F} x_e − Σ_F x_e <= m − 2` for a cycle `C` of length `m` and an
/// odd subset `F` of its edges.
pub fn cycle_inequality(host: &Graph, cycle: &CycleSubgraph, flipped: &[Edge]) -> Result<LinIneq> {
    if flipped.len() % 2 == 0 {
        return Err(Error::EvenSubset(flipped.len()));
    }
    let cycle_edges = cycle.edges();
    let mut coefs = Vec::with_capacity(cycle_edges.len());
    for e in &cycle_edges {
        let c = if flipped.contains(e) { -1 } else { 1 };
        coefs.push((*e, rat(c)));
    }
    if let Some(e) = flipped.iter().find(|e| !cycle_edges.contains(e)) {
        return Err(Error::InvalidArgument(format!("{e} is not an edge of the cycle")));
    }
    let distinct: std::collections::BTreeSet<_> = flipped.iter().collect();
    if distinct.len() != flipped.len() {
        return Err(Error::InvalidArgument("repeated edge in F".into()));
    }
    LinIneq::from_edges(host, coefs, rat(cycle.len() as i64 - 2))
}

/// `x_e <= 1` and `−x_e <= 1` for every edge, in edge-index order.
pub fn edge_inequalities(g: &Graph) -> Vec<LinIneq> {
    let n = g.edge_count();
    (0..n)
        .flat_map(|i| {
            [1, -1].map(|s| {
                let mut alpha = vec![Rat::zero(); n];
                alpha[i] = rat(s);
                LinIneq::new(alpha, rat(1))
            })
        })
        .collect()
}

/// Negates the coefficients on the cutset `δ(U)`; the right-hand side is
/// unchanged. Switching is a symmetry of `CUT±(G)`.
pub fn switch(ineq: &LinIneq, u: &Cut, g: &Graph) -> LinIneq {
    assert_eq!(ineq.dim(), g.edge_count(), "dimension mismatch");
    let alpha = g
        .edges()
        .iter()
        .zip(&ineq.alpha)
        .map(|(e, a)| if u.contains(e.lo()) != u.contains(e.hi()) { -a } else { a.clone() })
        .collect();
    LinIneq::new(alpha, ineq.rhs.clone())
}

/// `Σ_{i<j} b_i b_j <= Σ_{i<j} b_i b_j x_ij` on `K_p`, written in `<=` form as
/// `Σ −b_i b_j x_ij <= −Σ b_i b_j`.
pub fn hypermetric_inequality(b: &[i64]) -> Result<LinIneq> {
    if b.iter().sum::<i64>() != 1 {
        return Err(Error::InvalidArgument(format!(
            "hypermetric vector must sum to 1, got {b:?}"
        )));
    }
    let p = b.len();
    let kp = Graph::complete(p);
    let mut alpha = Vec::with_capacity(kp.edge_count());
    let mut rhs = 0i64;
    for e in kp.edges() {
        let prod = b[e.lo() - 1] * b[e.hi() - 1];
        alpha.push(rat(-prod));
        rhs -= prod;
    }
    Ok(LinIneq::new(alpha, rat(rhs)))
}
