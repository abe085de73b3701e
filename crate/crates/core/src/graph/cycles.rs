use std::collections::BTreeSet;

use super::{Cut, Edge, Graph};
use crate::{Error, Result};

/// A cycle `v₁ v₂ … v_m v₁` in a host graph, `m >= 3`.
///
/// Cycle position `s` (1-based) refers to the edge `{v_s, v_{s+1}}`, with
/// `v_{m+1} = v₁`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleSubgraph {
    vertices: Vec<usize>,
    chordless: bool,
}

impl CycleSubgraph {
    /// Checks that consecutive vertices (including the wrap pair) are edges of
    /// `host` and records whether the cycle is induced.
    pub fn new(host: &Graph, vertices: Vec<usize>) -> Result<Self> {
        let m = vertices.len();
        if m < 3 {
            return Err(Error::InvalidCycle(format!("length {m} < 3")));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != m {
            return Err(Error::InvalidCycle("repeated vertex".into()));
        }
        for s in 0..m {
            let (a, b) = (vertices[s], vertices[(s + 1) % m]);
            if !host.has_edge(a, b) {
                return Err(Error::InvalidCycle(format!("{a}-{b} is not an edge")));
            }
        }
        let chordless = (0..m).all(|s| {
            (s + 2..m).all(|t| (s == 0 && t == m - 1) || !host.has_edge(vertices[s], vertices[t]))
        });
        Ok(CycleSubgraph {
            vertices,
            chordless,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_chordless(&self) -> bool {
        self.chordless
    }

    /// Edge at cycle position `s`, 1-based.
    pub fn edge_at(&self, s: usize) -> Edge {
        let m = self.len();
        Edge::new(self.vertices[s - 1], self.vertices[s % m])
    }

    /// Edges in cycle-position order.
    pub fn edges(&self) -> Vec<Edge> {
        (1..=self.len()).map(|s| self.edge_at(s)).collect()
    }

    /// Cycle position of `e`, if it is an edge of the cycle.
    pub fn position(&self, e: Edge) -> Option<usize> {
        (1..=self.len()).find(|&s| self.edge_at(s) == e)
    }
}

/// Every induced cycle of `g` exactly once.
///
/// Induced paths are grown from their smallest vertex `s` through larger
/// vertices only; a path closes when its end is adjacent to `s`. Reflections
/// are removed by requiring the second vertex to be smaller than the last.
/// Output is ordered by length, then lexicographically.
pub fn chordless_cycles(g: &Graph) -> Vec<CycleSubgraph> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    for s in 1..=g.order() {
        path.clear();
        path.push(s);
        extend_induced(g, &mut path, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.vertices.cmp(&b.vertices)));
    out
}

fn extend_induced(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<CycleSubgraph>) {
    let s = path[0];
    let last = *path.last().unwrap();
    for v in g.neighbors(last) {
        if v <= s || path.contains(&v) {
            continue;
        }
        // v may only touch `last` and, when closing, `s`
        let interior = if path.len() > 2 {
            &path[1..path.len() - 1]
        } else {
            &[][..]
        };
        if interior.iter().any(|&w| g.has_edge(v, w)) {
            continue;
        }
        if path.len() >= 2 && g.has_edge(v, s) {
            if path[1] < v {
                let mut vertices = path.clone();
                vertices.push(v);
                out.push(CycleSubgraph {
                    vertices,
                    chordless: true,
                });
            }
            continue;
        }
        path.push(v);
        extend_induced(g, path, out);
        path.pop();
    }
}

/// The cut `U ∌ 1` of the cycle `1-2-…-p-1` whose cutset is `m`.
///
/// Walks the cycle once, toggling membership whenever the edge just crossed
/// is in `m`; this closes up consistently exactly when `|m|` is even.
pub fn cycle_cut_preimage(p: usize, m: &[Edge]) -> Result<Cut> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("cycle length {p} < 3")));
    }
    let mut crossing = vec![false; p + 1];
    for e in m {
        let s = if e.hi() == e.lo() + 1 {
            e.lo()
        } else if e.lo() == 1 && e.hi() == p {
            p
        } else {
            return Err(Error::NotACycleCutset(format!("{e} is not an edge of C_{p}")));
        };
        if crossing[s] {
            return Err(Error::NotACycleCutset(format!("{e} listed twice")));
        }
        crossing[s] = true;
    }
    if m.len() % 2 == 1 {
        return Err(Error::NotACycleCutset(format!(
            "{} edges is odd",
            m.len()
        )));
    }
    let mut inside = false;
    let mut members = Vec::new();
    for s in 1..p {
        inside ^= crossing[s];
        if inside {
            members.push(s + 1);
        }
    }
    Cut::new(p, members)
}
