//! Simple undirected graphs on the vertex set `1..=p`.
//!
//! Edges are stored sorted lexicographically on `(min, max)` endpoint pairs and
//! that order is the edge index used for every vector in `ℝ^E`.

mod cycles;
mod minor;

use std::collections::BTreeSet;
use std::fmt;

use crate::{Error, Result};

pub use cycles::{chordless_cycles, cycle_cut_preimage, CycleSubgraph};
pub use minor::{contains_subgraph, has_minor, is_series_parallel};

/// An unordered vertex pair `{i, j}` with `i < j`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop {a}-{a} is not an edge");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(&self) -> usize {
        self.0
    }

    pub fn hi(&self) -> usize {
        self.1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// Key used by the JSON formats: `"i-j"` with `i < j`.
    pub fn key(&self) -> String {
        format!("{}-{}", self.0, self.1)
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let (a, b) = key
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("edge key {key:?} is not of the form \"i-j\"")))?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex in edge key {key:?}")))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex in edge key {key:?}")))?;
        if a >= b {
            return Err(Error::Parse(format!("edge key {key:?} must satisfy i < j")));
        }
        Ok(Edge(a, b))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    p: usize,
    edges: Vec<Edge>,
    adj: Vec<bool>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(Edge::key).collect();
        write!(f, "Graph(p={}, [{}])", self.p, edges.join(" "))
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints.
    pub fn new(p: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > p || b > p {
                return Err(Error::InvalidGraph(format!(
                    "edge {a}-{b} has an endpoint outside 1..={p}"
                )));
            }
            if !set.insert(Edge::new(a, b)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {a}-{b}")));
            }
        }
        Ok(Self::from_edge_set(p, set))
    }

    fn from_edge_set(p: usize, set: BTreeSet<Edge>) -> Self {
        let mut adj = vec![false; p * p];
        for e in &set {
            adj[(e.0 - 1) * p + (e.1 - 1)] = true;
            adj[(e.1 - 1) * p + (e.0 - 1)] = true;
        }
        Graph {
            p,
            edges: set.into_iter().collect(),
            adj,
        }
    }

    pub fn empty(p: usize) -> Self {
        Self::from_edge_set(p, BTreeSet::new())
    }

    pub fn complete(p: usize) -> Self {
        let set = (1..=p)
            .flat_map(|i| (i + 1..=p).map(move |j| Edge(i, j)))
            .collect();
        Self::from_edge_set(p, set)
    }

    /// The cycle `1-2-…-p-1`. Requires `p >= 3`.
    pub fn cycle(p: usize) -> Self {
        assert!(p >= 3, "a cycle needs at least 3 vertices");
        let set = (1..=p).map(|i| Edge::new(i, i % p + 1)).collect();
        Self::from_edge_set(p, set)
    }

    pub fn path(p: usize) -> Self {
        let set = (1..p).map(|i| Edge(i, i + 1)).collect();
        Self::from_edge_set(p, set)
    }

    /// `K_{m,n}` with parts `1..=m` and `m+1..=m+n`.
    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let set = (1..=m)
            .flat_map(|i| (m + 1..=m + n).map(move |j| Edge(i, j)))
            .collect();
        Self::from_edge_set(m + n, set)
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in edge-index order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && a >= 1 && b >= 1 && a <= self.p && b <= self.p && self.adj[(a - 1) * self.p + (b - 1)]
    }

    /// Coordinate of `e` in `ℝ^E`.
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.p).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// All unordered pairs that are not edges, lexicographic.
    pub fn nonedges(&self) -> Vec<Edge> {
        (1..=self.p)
            .flat_map(|i| (i + 1..=self.p).map(move |j| Edge(i, j)))
            .filter(|e| !self.has_edge(e.0, e.1))
            .collect()
    }

    /// The graph on the same vertices whose edges are the nonedges of `self`.
    pub fn complement(&self) -> Graph {
        Self::from_edge_set(self.p, self.nonedges().into_iter().collect())
    }

    /// Whether `e` lies in some 3-cycle.
    pub fn in_triangle(&self, e: Edge) -> bool {
        (1..=self.p).any(|w| self.has_edge(e.0, w) && self.has_edge(e.1, w))
    }

    pub fn is_connected(&self) -> bool {
        if self.p == 0 {
            return true;
        }
        let mut seen = vec![false; self.p + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.p
    }

    /// No chordless cycle of length four or more.
    pub fn is_chordal(&self) -> bool {
        chordless_cycles(self).iter().all(|c| c.len() == 3)
    }

    /// Edges with exactly one endpoint in `u`, in edge-index order.
    pub fn cutset(&self, u: &Cut) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| u.contains(e.0) != u.contains(e.1))
            .collect()
    }
}

/// One side of a vertex bipartition, stored canonically as the side that does
/// not contain vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut {
    p: usize,
    members: BTreeSet<usize>,
}

impl Cut {
    /// Canonicalizes `u ⊆ [p]`, replacing it by its complement when it
    /// contains vertex 1. Both sides have the same cutset.
    pub fn new(p: usize, u: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members = BTreeSet::new();
        for v in u {
            if v == 0 || v > p {
                return Err(Error::InvalidCut(format!("vertex {v} outside 1..={p}")));
            }
            if !members.insert(v) {
                return Err(Error::InvalidCut(format!("vertex {v} listed twice")));
            }
        }
        if members.contains(&1) {
            members = (1..=p).filter(|v| !members.contains(v)).collect();
        }
        Ok(Cut { p, members })
    }

    pub fn empty(p: usize) -> Self {
        Cut {
            p,
            members: BTreeSet::new(),
        }
    }

    /// Cut whose members are read from the bits of `mask`: bit `k` selects
    /// vertex `k + 2`.
    pub(crate) fn from_mask(p: usize, mask: u64) -> Self {
        let members = (2..=p).filter(|v| mask >> (v - 2) & 1 == 1).collect();
        Cut { p, members }
    }

    pub fn order(&self) -> usize {
        self.p
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
