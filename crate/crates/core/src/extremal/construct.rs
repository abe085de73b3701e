use std::collections::BTreeSet;

use crate::exact::{rat, SymMat};
use crate::graph::{cycle_cut_preimage, CycleSubgraph, Edge, Graph};
use crate::{Error, Result};

use super::{ExtremalCertificate, GramRep};

/// One-dimensional representation of `X_e` (`sign = 1`) or `X_e⁻`
/// (`sign = −1`): `1` at one endpoint, `sign` at the other, `0` elsewhere.
pub fn edge_gram(g: &Graph, e: Edge, sign: i8) -> Result<GramRep> {
    if g.edge_index(e).is_none() {
        return Err(Error::NotAnEdge { edge: e });
    }
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("sign must be ±1, got {sign}")));
    }
    let vectors = (1..=g.order())
        .map(|v| {
            vec![if v == e.lo() {
                rat(1)
            } else if v == e.hi() {
                rat(sign.into())
            } else {
                rat(0)
            }]
        })
        .collect();
    GramRep::new(g.clone(), vectors)
}

/// Certificate for `X_e` or `X_e⁻`, paired with the facet `sign·x_e <= 1`.
pub fn edge_matrix(g: &Graph, e: Edge, sign: i8) -> Result<ExtremalCertificate> {
    let rep = edge_gram(g, e, sign)?;
    let i = g.edge_index(e).expect("checked above");
    let mut alpha = vec![rat(0); g.edge_count()];
    alpha[i] = rat(sign.into());
    let facet = crate::cutpoly::LinIneq::new(alpha, rat(1));
    ExtremalCertificate::for_matrix(g, rep.gram(), Some(facet), 1)
}

/// Edge `{s, s+1}` of `C_p` (position `s`, 1-based).
fn cycle_edge(p: usize, s: usize) -> Edge {
    Edge::new(s, s % p + 1)
}

/// The explicit rank-`(p−2)` representation on `C_p` whose Gram matrix has
/// every cycle entry `+1`, except `(i, i+1)` which is `−1` when `p` is even.
pub fn delta_max_gram(p: usize, i: usize) -> Result<GramRep> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("cycle length {p} < 3")));
    }
    if i == 0 || i > p {
        return Err(Error::InvalidArgument(format!("vertex {i} not in 1..={p}")));
    }
    if p % 2 == 1 && i != 1 {
        return Err(Error::InvalidArgument(format!(
            "odd cycle length {p} requires i = 1, got {i}"
        )));
    }
    let k = p - 2;
    let unit = |j: usize| {
        let mut v = vec![rat(0); k];
        v[j - 1] = rat(1);
        v
    };
    let mut vectors = vec![Vec::new(); p];
    for offset in 0..p {
        let v = match offset {
            0 => unit(k),
            1 => (1..=k).map(|j| rat(if j % 2 == 1 { 1 } else { -1 })).collect(),
            2 => unit(1),
            o => {
                let mut v = unit(o - 2);
                v[o - 2] = rat(1);
                v
            }
        };
        vectors[(i - 1 + offset) % p] = v;
    }
    GramRep::new(Graph::cycle(p), vectors)
}

/// Representation on `C_p` whose Gram matrix has `+1` at `(s, s+1)` for
/// `s ∈ F` and `−1` for `s ∉ F` (positions mod `p`).
///
/// Starts from `delta_max_gram(p, 1)` and negates the vectors on a cut whose
/// cutset is the set of cycle positions where the signs must change.
pub fn delta_gram(p: usize, f: &[usize]) -> Result<GramRep> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("cycle length {p} < 3")));
    }
    let set: BTreeSet<usize> = f.iter().copied().collect();
    if set.len() != f.len() {
        return Err(Error::InvalidArgument("repeated element in F".into()));
    }
    if let Some(s) = set.iter().find(|&&s| s == 0 || s > p) {
        return Err(Error::InvalidArgument(format!("{s} not in 1..={p}")));
    }
    if set.len() % 2 == 0 {
        return Err(Error::EvenSubset(set.len()));
    }
    let base = delta_max_gram(p, 1)?;
    let base_negative = |s: usize| p % 2 == 0 && s == 1;
    let flips: Vec<Edge> = (1..=p)
        .filter(|s| base_negative(*s) != !set.contains(s))
        .map(|s| cycle_edge(p, s))
        .collect();
    let u = cycle_cut_preimage(p, &flips)?;
    let vectors = base
        .vectors()
        .iter()
        .enumerate()
        .map(|(t, v)| {
            if u.contains(t + 1) {
                v.iter().map(|x| -x).collect()
            } else {
                v.clone()
            }
        })
        .collect();
    GramRep::new(Graph::cycle(p), vectors)
}

/// Gram matrix of [`delta_gram`].
pub fn delta_matrix(p: usize, f: &[usize]) -> Result<SymMat> {
    Ok(delta_gram(p, f)?.gram())
}

/// Places a representation on `C_m` onto a chordless cycle of `g`: the
/// `t`-th cycle vertex gets `u_t`, every other vertex the zero vector.
pub fn embed(g: &Graph, cycle: &CycleSubgraph, rep: &GramRep) -> Result<GramRep> {
    let checked = CycleSubgraph::new(g, cycle.vertices().to_vec())?;
    if !checked.is_chordless() {
        return Err(Error::InvalidCycle(format!(
            "cycle {:?} has a chord",
            cycle.vertices()
        )));
    }
    let m = cycle.len();
    if *rep.host() != Graph::cycle(m) {
        return Err(Error::InvalidArgument(format!(
            "representation is not on the {m}-cycle"
        )));
    }
    let mut vectors = vec![vec![rat(0); rep.dim()]; g.order()];
    for (t, &v) in cycle.vertices().iter().enumerate() {
        vectors[v - 1] = rep.vectors()[t].clone();
    }
    GramRep::new(g.clone(), vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{is_psd, rat};
    use crate::extremal::{frame_space_rank, is_extremal, target_frame_rank};

    fn ints(rep: &GramRep) -> Vec<Vec<i64>> {
        rep.vectors()
            .iter()
            .map(|v| v.iter().map(|x| x.to_integer().try_into().unwrap()).collect())
            .collect()
    }

    #[test]
    fn delta_max_small_cases() {
        assert_eq!(
            ints(&delta_max_gram(4, 1).unwrap()),
            vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]]
        );
        let r3 = delta_max_gram(3, 1).unwrap();
        assert_eq!(ints(&r3), vec![vec![1]; 3]);
        assert_eq!(r3.gram(), SymMat::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap());
        let r5 = delta_max_gram(5, 1).unwrap();
        assert_eq!(r5.dim(), 3);
        assert_eq!(r5.gram().rank(), 3);
    }

    #[test]
    fn delta_max_adjacent_products() {
        for p in 3..=9 {
            let is: Vec<usize> = if p % 2 == 1 { vec![1] } else { (1..=p).collect() };
            for i in is {
                let m = delta_max_gram(p, i).unwrap().gram();
                for s in 1..=p {
                    let e = cycle_edge(p, s);
                    let want = if p % 2 == 0 && s == i { -1 } else { 1 };
                    assert_eq!(*m.get(e.lo() - 1, e.hi() - 1), rat(want), "p={p} i={i} s={s}");
                }
            }
        }
        assert!(delta_max_gram(5, 2).is_err());
        assert!(delta_max_gram(2, 1).is_err());
        assert!(delta_max_gram(4, 5).is_err());
    }

    #[test]
    fn delta_gram_examples() {
        assert_eq!(delta_gram(4, &[2, 3, 4]).unwrap(), delta_max_gram(4, 1).unwrap());
        assert_eq!(
            ints(&delta_gram(4, &[2]).unwrap()),
            vec![vec![0, 1], vec![1, -1], vec![1, 0], vec![-1, -1]]
        );
        for p in [3, 5, 7] {
            let all: Vec<usize> = (1..=p).collect();
            assert_eq!(delta_gram(p, &all).unwrap(), delta_max_gram(p, 1).unwrap());
        }
        assert_eq!(delta_gram(4, &[1, 2]), Err(Error::EvenSubset(2)));
        assert!(delta_gram(4, &[5]).is_err());
        assert!(delta_gram(4, &[1, 1, 2]).is_err());
    }

    #[test]
    fn delta_matrices_match_printed() {
        assert_eq!(
            delta_matrix(4, &[2, 3, 4]).unwrap(),
            SymMat::from_i64(&[&[1, -1, 0, 1], &[-1, 2, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 2]]).unwrap()
        );
        assert_eq!(
            delta_matrix(4, &[2]).unwrap(),
            SymMat::from_i64(&[&[1, -1, 0, -1], &[-1, 2, 1, 0], &[0, 1, 1, -1], &[-1, 0, -1, 2]])
                .unwrap()
        );
    }

    #[test]
    fn delta_properties_small() {
        for p in 3..=7usize {
            let c = Graph::cycle(p);
            for mask in 1u32..1 << p {
                if mask.count_ones() % 2 == 0 {
                    continue;
                }
                let f: Vec<usize> = (1..=p).filter(|s| mask >> (s - 1) & 1 == 1).collect();
                let rep = delta_gram(p, &f).unwrap();
                let m = rep.gram();
                assert!(is_psd(&m));
                assert_eq!(m.rank(), p - 2);
                assert_eq!(m.trace(), rat(3 * p as i64 - 6));
                for s in 1..=p {
                    let e = cycle_edge(p, s);
                    let want = if f.contains(&s) { 1 } else { -1 };
                    assert_eq!(*m.get(e.lo() - 1, e.hi() - 1), rat(want));
                }
                assert_eq!(frame_space_rank(&rep), target_frame_rank(p - 2));
                assert!(is_extremal(&c, &m).unwrap());
            }
        }
    }

    #[test]
    fn edge_reps() {
        let c4 = Graph::cycle(4);
        let m = edge_gram(&c4, Edge::new(1, 2), 1).unwrap().gram();
        let mut want = SymMat::zeros(4);
        for (i, j) in [(0, 0), (0, 1), (1, 1)] {
            want.set(i, j, rat(1));
        }
        assert_eq!(m, want);
        let neg = edge_gram(&c4, Edge::new(1, 2), -1).unwrap().gram();
        assert_eq!(*neg.get(0, 1), rat(-1));
        assert_eq!(
            edge_gram(&c4, Edge::new(1, 3), 1),
            Err(Error::NotAnEdge { edge: Edge::new(1, 3) })
        );
        let cert = edge_matrix(&c4, Edge::new(2, 3), -1).unwrap();
        assert_eq!((cert.rank, cert.frame_rank, cert.target), (1, 0, 0));
        assert!(cert.extremal);
    }

    #[test]
    fn embedding() {
        let c4 = Graph::cycle(4);
        let cyc = CycleSubgraph::new(&c4, vec![1, 2, 3, 4]).unwrap();
        let rep = delta_gram(4, &[2]).unwrap();
        assert_eq!(embed(&c4, &cyc, &rep).unwrap(), rep);

        let pendant = Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        let w = embed(&pendant, &CycleSubgraph::new(&pendant, vec![1, 2, 3, 4]).unwrap(), &rep).unwrap();
        assert!(w.vectors()[4].iter().all(|x| *x == rat(0)));
        let m = w.gram();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j), rep.gram().get(i, j));
            }
            assert_eq!(*m.get(i, 4), rat(0));
        }

        let k33 = Graph::complete_bipartite(3, 3);
        let cyc = CycleSubgraph::new(&k33, vec![1, 4, 2, 5]).unwrap();
        let m = embed(&k33, &cyc, &rep).unwrap().gram();
        assert_eq!(m.rank(), 2);
        assert!(is_extremal(&k33, &m).unwrap());

        let chorded = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]).unwrap();
        let cyc = CycleSubgraph::new(&chorded, vec![1, 2, 3, 4]).unwrap();
        assert!(matches!(embed(&chorded, &cyc, &rep), Err(Error::InvalidCycle(_))));
        let c5 = Graph::cycle(5);
        let cyc = CycleSubgraph::new(&c5, vec![1, 2, 3, 4, 5]).unwrap();
        assert!(embed(&c5, &cyc, &rep).is_err());
    }
}
