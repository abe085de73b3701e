use std::collections::BTreeSet;

use num_traits::Signed;

use crate::exact::{rat, Rat, SymMat};
use crate::graph::{chordless_cycles, is_series_parallel, Graph};
use crate::{Error, Result};

use super::frame::check_pattern;

/// Ranks of extremal matrices of `S^p_{⪰0}(G)`; `order` is the largest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSet {
    pub ranks: BTreeSet<usize>,
    pub order: usize,
}

/// For a series-parallel graph the extremal ranks are `1` and `m − 2` for
/// each chordless cycle `C_m`.
pub fn extremal_rank_set_series_parallel(g: &Graph) -> Result<RankSet> {
    if !is_series_parallel(g) {
        return Err(Error::ForbiddenMinor("K_4"));
    }
    let mut ranks = BTreeSet::from([1]);
    ranks.extend(chordless_cycles(g).iter().map(|c| c.len() - 2));
    let order = *ranks.last().expect("nonempty");
    Ok(RankSet { ranks, order })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderBounds {
    pub lower: usize,
    pub upper: usize,
}

/// Bounds on the sparsity order.
///
/// Lower: every chordless `C_m` carries an extremal matrix of rank `m − 2`.
/// Upper: `p − 2`; `1` for chordal graphs; and the largest `k` with
/// `k(k+1)/2 − 1 <= |Ē|`, since the frame space is spanned by `|Ē|` matrices.
pub fn sparsity_order_bounds(g: &Graph) -> OrderBounds {
    let lower = chordless_cycles(g)
        .iter()
        .map(|c| c.len() - 2)
        .max()
        .unwrap_or(0)
        .max(1);
    let nonedges = g.nonedges().len();
    let mut upper = (1..).take_while(|k| k * (k + 1) / 2 - 1 <= nonedges).last().unwrap_or(1);
    if g.order() >= 3 {
        upper = upper.min(g.order() - 2);
    }
    if g.is_chordal() {
        upper = 1;
    }
    OrderBounds { lower, upper }
}

/// `(2 / tr M) · M` restricted to the edges, in edge-index order.
pub fn polar_point(m: &SymMat, g: &Graph) -> Result<Vec<Rat>> {
    check_pattern(g, m)?;
    let tr = m.trace();
    if !tr.is_positive() {
        return Err(Error::NonPositiveTrace);
    }
    let scale = rat(2) / tr;
    Ok(g.edges()
        .iter()
        .map(|e| m.get(e.lo() - 1, e.hi() - 1) * &scale)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::extremal::{delta_matrix, edge_gram};
    use crate::graph::Edge;

    #[test]
    fn rank_sets() {
        let r = extremal_rank_set_series_parallel(&Graph::cycle(5)).unwrap();
        assert_eq!((r.ranks, r.order), (BTreeSet::from([1, 3]), 3));
        let r = extremal_rank_set_series_parallel(&Graph::cycle(4)).unwrap();
        assert_eq!((r.ranks, r.order), (BTreeSet::from([1, 2]), 2));
        let r = extremal_rank_set_series_parallel(&Graph::path(6)).unwrap();
        assert_eq!((r.ranks, r.order), (BTreeSet::from([1]), 1));
        assert_eq!(
            extremal_rank_set_series_parallel(&Graph::complete(4)),
            Err(Error::ForbiddenMinor("K_4"))
        );
    }

    #[test]
    fn bounds() {
        assert_eq!(sparsity_order_bounds(&Graph::cycle(7)), OrderBounds { lower: 5, upper: 5 });
        assert_eq!(sparsity_order_bounds(&Graph::complete(6)), OrderBounds { lower: 1, upper: 1 });
        assert_eq!(sparsity_order_bounds(&Graph::path(5)), OrderBounds { lower: 1, upper: 1 });
        assert_eq!(sparsity_order_bounds(&Graph::empty(1)), OrderBounds { lower: 1, upper: 1 });
        let b = sparsity_order_bounds(&Graph::complete_bipartite(3, 3));
        assert_eq!(b, OrderBounds { lower: 2, upper: 3 });
    }

    #[test]
    fn bounds_are_ordered_on_cycles_with_pendants() {
        for p in 3..=9 {
            let mut pairs: Vec<(usize, usize)> = Graph::cycle(p).edges().iter().map(|e| (e.lo(), e.hi())).collect();
            pairs.push((1, p + 1));
            let b = sparsity_order_bounds(&Graph::new(p + 1, pairs).unwrap());
            assert!(b.lower <= b.upper, "{b:?}");
            assert_eq!(b.lower, p - 2);
        }
    }

    #[test]
    fn polar_points() {
        let c4 = Graph::cycle(4);
        let xe = edge_gram(&c4, Edge::new(1, 2), 1).unwrap().gram();
        assert_eq!(polar_point(&xe, &c4).unwrap(), vec![rat(1), rat(0), rat(0), rat(0)]);
        let third = |v: [i64; 4]| v.iter().map(|&x| ratio(x, 3)).collect::<Vec<_>>();
        // edge order 12, 14, 23, 34
        assert_eq!(
            polar_point(&delta_matrix(4, &[2]).unwrap(), &c4).unwrap(),
            third([-1, -1, 1, -1])
        );
        assert_eq!(
            polar_point(&delta_matrix(4, &[2, 3, 4]).unwrap(), &c4).unwrap(),
            third([-1, 1, 1, 1])
        );
        assert_eq!(polar_point(&SymMat::zeros(4), &c4), Err(Error::NonPositiveTrace));
    }
}
