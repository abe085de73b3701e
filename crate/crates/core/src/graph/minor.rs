//! Exhaustive minor testing for desk-scale graphs.
//!
//! `H` is a minor of `G` iff some graph obtained from `G` by contractions alone
//! contains `H` as a subgraph: vertex and edge deletions can always be deferred
//! to the end. The search walks partitions of `V(G)` into connected blocks,
//! merging two adjacent blocks per step, and memoizes visited partitions.

use std::collections::HashSet;

use super::Graph;

/// Whether `h` is a minor of `g`.
pub fn has_minor(g: &Graph, h: &Graph) -> bool {
    if h.order() > g.order() || h.edge_count() > g.edge_count() {
        return false;
    }
    let target = Pattern::of(h);
    let start: Vec<usize> = (0..g.order()).collect();
    let mut seen = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(labels) = stack.pop() {
        let q = Quotient::new(g, &labels);
        if q.edges < h.edge_count() {
            continue;
        }
        if target.embeds_in(&q.adj, q.blocks) {
            return true;
        }
        if q.blocks == h.order() {
            continue;
        }
        for a in 0..q.blocks {
            for b in a + 1..q.blocks {
                if !q.adj[a * q.blocks + b] {
                    continue;
                }
                let merged = canonical(labels.iter().map(|&l| if l == b { a } else { l }));
                if seen.insert(merged.clone()) {
                    stack.push(merged);
                }
            }
        }
    }
    false
}

/// Whether `h` is a (not necessarily induced) subgraph of `g` up to relabeling.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    let mut adj = vec![false; n * n];
    for e in g.edges() {
        adj[(e.lo() - 1) * n + (e.hi() - 1)] = true;
        adj[(e.hi() - 1) * n + (e.lo() - 1)] = true;
    }
    Pattern::of(h).embeds_in(&adj, n)
}

/// No `K_4` minor.
pub fn is_series_parallel(g: &Graph) -> bool {
    !has_minor(g, &Graph::complete(4))
}

fn canonical(labels: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut map = Vec::new();
    labels
        .map(|l| match map.iter().position(|&m| m == l) {
            Some(i) => i,
            None => {
                map.push(l);
                map.len() - 1
            }
        })
        .collect()
}

struct Quotient {
    blocks: usize,
    adj: Vec<bool>,
    edges: usize,
}

impl Quotient {
    fn new(g: &Graph, labels: &[usize]) -> Self {
        let blocks = labels.iter().max().map_or(0, |m| m + 1);
        let mut adj = vec![false; blocks * blocks];
        let mut edges = 0;
        for e in g.edges() {
            let (a, b) = (labels[e.lo() - 1], labels[e.hi() - 1]);
            if a != b && !adj[a * blocks + b] {
                adj[a * blocks + b] = true;
                adj[b * blocks + a] = true;
                edges += 1;
            }
        }
        Quotient { blocks, adj, edges }
    }
}

/// Pattern graph with its vertices ordered for backtracking: highest degree
/// first, then vertices with the most already-placed neighbours.
struct Pattern {
    order: Vec<usize>,
    degree: Vec<usize>,
    adj: Vec<Vec<usize>>,
}

impl Pattern {
    fn of(h: &Graph) -> Self {
        let n = h.order();
        let adj: Vec<Vec<usize>> = (1..=n)
            .map(|v| h.neighbors(v).map(|u| u - 1).collect())
            .collect();
        let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = adj[v].iter().filter(|&&u| placed[u]).count();
                    (links, degree[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        Pattern { order, degree, adj }
    }

    fn embeds_in(&self, host: &[bool], n: usize) -> bool {
        if self.order.len() > n {
            return false;
        }
        let host_degree: Vec<usize> = (0..n)
            .map(|v| (0..n).filter(|&u| host[v * n + u]).count())
            .collect();
        let mut image = vec![usize::MAX; self.order.len()];
        let mut used = vec![false; n];
        self.place(0, host, n, &host_degree, &mut image, &mut used)
    }

    fn place(
        &self,
        k: usize,
        host: &[bool],
        n: usize,
        host_degree: &[usize],
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == self.order.len() {
            return true;
        }
        let v = self.order[k];
        for x in 0..n {
            if used[x] || host_degree[x] < self.degree[v] {
                continue;
            }
            let fits = self.adj[v]
                .iter()
                .all(|&u| image[u] == usize::MAX || host[x * n + image[u]]);
            if !fits {
                continue;
            }
            image[v] = x;
            used[x] = true;
            if self.place(k + 1, host, n, host_degree, image, used) {
                return true;
            }
            image[v] = usize::MAX;
            used[x] = false;
        }
        false
    }
}
