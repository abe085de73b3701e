use crate::exact::{rat, Rat};
use crate::graph::{chordless_cycles, has_minor, CycleSubgraph, Edge, Graph};
use crate::{Error, Result};

use super::ineq::{cycle_inequality, LinIneq};

/// Where a facet of a K5-minor-free cut polytope comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetSource {
    /// `sign · x_e <= 1`.
    Edge { edge: Edge, sign: i8 },
    /// Cycle inequality of a chordless cycle; `flipped` is the odd edge set `F`.
    Cycle {
        cycle: CycleSubgraph,
        flipped: Vec<Edge>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub source: FacetSource,
    pub ineq: LinIneq,
}

/// The facet system of `CUT±(G)` for a graph without a `K_5` minor, sorted
/// lexicographically by `(alpha, rhs)`.
///
/// Cycle inequalities are listed for every chordless cycle and every odd
/// subset of its edges. The bounds `±x_e <= 1` are listed only for edges in no
/// triangle: on a triangle edge they are implied by the triangle inequalities.
pub fn facet_system(g: &Graph) -> Result<Vec<Facet>> {
    if has_minor(g, &Graph::complete(5)) {
        return Err(Error::ForbiddenMinor("K_5"));
    }
    let mut out = Vec::new();
    for (i, &e) in g.edges().iter().enumerate() {
        if g.in_triangle(e) {
            continue;
        }
        for sign in [1i8, -1] {
            let mut alpha = vec![rat(0); g.edge_count()];
            alpha[i] = rat(sign.into());
            out.push(Facet {
                source: FacetSource::Edge { edge: e, sign },
                ineq: LinIneq::new(alpha, rat(1)),
            });
        }
    }
    for cycle in chordless_cycles(g) {
        let edges = cycle.edges();
        let m = edges.len();
        for mask in 0u64..1 << m {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let flipped: Vec<Edge> = (0..m)
                .filter(|s| mask >> s & 1 == 1)
                .map(|s| edges[s])
                .collect();
            let ineq = cycle_inequality(g, &cycle, &flipped)?;
            out.push(Facet {
                source: FacetSource::Cycle {
                    cycle: cycle.clone(),
                    flipped,
                },
                ineq,
            });
        }
    }
    out.sort_by(|a, b| a.ineq.cmp(&b.ineq));
    Ok(out)
}

/// Inequalities of [`facet_system`].
pub fn facets_k5_free(g: &Graph) -> Result<Vec<LinIneq>> {
    Ok(facet_system(g)?.into_iter().map(|f| f.ineq).collect())
}

impl Facet {
    pub fn rhs(&self) -> &Rat {
        self.ineq.rhs()
    }
}
