use num_traits::Zero;

use crate::exact::{rank, rank_factorize, Matrix, Rat, SymMat};
use crate::graph::{Edge, Graph};
use crate::{Error, Result};

use super::GramRep;

/// `k(k+1)/2 − 1`, the frame rank of an extremal matrix of rank `k >= 1`.
pub fn target_frame_rank(k: usize) -> usize {
    (k * (k + 1) / 2).saturating_sub(1)
}

/// Dimension of the span of `u_i u_jᵀ + u_j u_iᵀ` over the nonedges of the
/// host, as vectors of upper-triangle entries.
pub fn frame_space_rank(rep: &GramRep) -> usize {
    frame_rank_of(rep.vectors(), &rep.host().nonedges(), rep.dim())
}

fn frame_rank_of(vectors: &[Vec<Rat>], nonedges: &[Edge], k: usize) -> usize {
    if k == 0 || nonedges.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rat>> = nonedges
        .iter()
        .map(|e| {
            let (u, w) = (&vectors[e.lo() - 1], &vectors[e.hi() - 1]);
            let mut row = Vec::with_capacity(k * (k + 1) / 2);
            for a in 0..k {
                for b in a..k {
                    row.push(&u[a] * &w[b] + &w[a] * &u[b]);
                }
            }
            row
        })
        .collect();
    rank(&Matrix::from_rows(rows).expect("rows of equal length"))
}

/// Checks the zero pattern of `m` against `g`.
pub(crate) fn check_pattern(g: &Graph, m: &SymMat) -> Result<()> {
    if m.dim() != g.order() {
        return Err(Error::Dimension(format!(
            "{0}×{0} matrix for a graph on {1} vertices",
            m.dim(),
            g.order()
        )));
    }
    match g.nonedges().into_iter().find(|e| !m.get(e.lo() - 1, e.hi() - 1).is_zero()) {
        Some(edge) => Err(Error::ZeroPattern { edge }),
        None => Ok(()),
    }
}

/// `(rank, frame rank)` of a PSD matrix in `S^p(G)`, read off the rows of `B`
/// in `M = B·diag(D)·Bᵀ`. Scaling by the positive pivots is a congruence, so
/// the frame rank is that of any Gram representation.
pub(crate) fn rank_and_frame_rank(g: &Graph, m: &SymMat) -> Result<(usize, usize)> {
    check_pattern(g, m)?;
    let f = rank_factorize(m)?;
    let k = f.rank();
    let rows: Vec<Vec<Rat>> = (0..m.dim()).map(|i| f.b.row(i).to_vec()).collect();
    Ok((k, frame_rank_of(&rows, &g.nonedges(), k)))
}

/// Whether `m` spans an extreme ray of `S^p_{⪰0}(G)`. The zero matrix is not
/// extremal.
pub fn is_extremal(g: &Graph, m: &SymMat) -> Result<bool> {
    let (k, r) = rank_and_frame_rank(g, m)?;
    Ok(k > 0 && r == target_frame_rank(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gram, rat};
    use proptest::prelude::*;

    fn rep(g: Graph, vs: &[&[i64]]) -> GramRep {
        GramRep::new(g, vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn targets() {
        assert_eq!(target_frame_rank(1), 0);
        assert_eq!(target_frame_rank(2), 2);
        assert_eq!(target_frame_rank(3), 5);
    }

    #[test]
    fn c4_rank_two_rep() {
        let r = rep(Graph::cycle(4), &[&[0, 1], &[1, -1], &[1, 0], &[1, 1]]);
        assert_eq!(frame_space_rank(&r), 2);
        assert!(is_extremal(r.host(), &r.gram()).unwrap());
    }

    #[test]
    fn identity_is_not_extremal_on_empty_graph() {
        let g = Graph::empty(2);
        let id = SymMat::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        // rank 2 needs frame rank 2, but there is only one nonedge
        assert!(!is_extremal(&g, &id).unwrap());
        assert!(is_extremal(&g, &SymMat::from_i64(&[&[1, 0], &[0, 0]]).unwrap()).unwrap());
        assert!(!is_extremal(&g, &SymMat::zeros(2)).unwrap());
    }

    #[test]
    fn errors() {
        let g = Graph::path(3);
        let bad_pattern = SymMat::from_i64(&[&[1, 0, 1], &[0, 1, 0], &[1, 0, 1]]).unwrap();
        assert_eq!(
            is_extremal(&g, &bad_pattern),
            Err(Error::ZeroPattern { edge: Edge::new(1, 3) })
        );
        let not_psd = SymMat::from_i64(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(is_extremal(&g, &not_psd), Err(Error::NotPsd));
    }

    proptest! {
        // The frame rank of a Gram representation does not depend on which
        // representation is used.
        #[test]
        fn factorization_independent(
            vs in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 2), 5),
        ) {
            let vectors: Vec<Vec<Rat>> = vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
            let m = gram(&vectors).unwrap();
            let pairs = (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j)));
            let g = Graph::new(5, pairs.filter(|&(i, j)| !m.get(i - 1, j - 1).is_zero())).unwrap();
            let k = m.rank();
            prop_assume!(k == 2);
            let r = GramRep::new(g.clone(), vectors).unwrap();
            let fr = frame_space_rank(&r);
            prop_assert!(fr <= g.nonedges().len().min(3));
            let (k2, fr2) = rank_and_frame_rank(&g, &m).unwrap();
            prop_assert_eq!((k2, fr2), (2, fr));
            prop_assert_eq!(is_extremal(&g, &m).unwrap(), fr == target_frame_rank(2));
        }
    }
}
