use rayon::prelude::*;

use crate::cutpoly::{facet_system, Facet, FacetSource, LinIneq};
use crate::exact::{rat, SymMat};
use crate::graph::Graph;
use crate::{Error, Result};

use super::construct::{delta_gram, edge_matrix, embed};
use super::frame::{rank_and_frame_rank, target_frame_rank};

/// A PSD matrix in `S^p(G)` together with its frame-space data and,
/// optionally, the facet whose normal its off-diagonal edge entries carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalCertificate {
    pub matrix: SymMat,
    pub rank: usize,
    pub frame_rank: usize,
    pub target: usize,
    pub extremal: bool,
    pub facet: Option<LinIneq>,
    /// `m_ij = sign · alpha_ij` on every edge.
    pub sign: i8,
}

impl ExtremalCertificate {
    /// Computes rank and frame rank of a nonzero PSD matrix in `S^p(G)`.
    pub fn for_matrix(g: &Graph, matrix: SymMat, facet: Option<LinIneq>, sign: i8) -> Result<Self> {
        let (rank, frame_rank) = rank_and_frame_rank(g, &matrix)?;
        if rank == 0 {
            return Err(Error::InvalidArgument("the zero matrix spans no ray".into()));
        }
        let target = target_frame_rank(rank);
        let cert = ExtremalCertificate {
            matrix,
            rank,
            frame_rank,
            target,
            extremal: frame_rank == target,
            facet,
            sign,
        };
        cert.check_facet(g)?;
        Ok(cert)
    }

    fn check_facet(&self, g: &Graph) -> Result<()> {
        if self.sign != 1 && self.sign != -1 {
            return Err(Error::Certificate(format!("sign {} is not ±1", self.sign)));
        }
        let Some(facet) = &self.facet else {
            return Ok(());
        };
        if facet.dim() != g.edge_count() {
            return Err(Error::Certificate("facet dimension differs from |E|".into()));
        }
        let s = rat(self.sign.into());
        for (e, a) in g.edges().iter().zip(facet.alpha()) {
            if *self.matrix.get(e.lo() - 1, e.hi() - 1) != &s * a {
                return Err(Error::Certificate(format!(
                    "entry {e} is not {} times the facet coefficient",
                    self.sign
                )));
            }
        }
        Ok(())
    }

    /// Recomputes every recorded quantity from the matrix alone.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let (rank, frame_rank) = rank_and_frame_rank(g, &self.matrix)
            .map_err(|e| Error::Certificate(e.to_string()))?;
        if rank != self.matrix.rank() {
            return Err(Error::Certificate("factorization rank disagrees with elimination rank".into()));
        }
        if (rank, frame_rank) != (self.rank, self.frame_rank) {
            return Err(Error::Certificate(format!(
                "recorded (rank, frame rank) = ({}, {}), recomputed ({rank}, {frame_rank})",
                self.rank, self.frame_rank
            )));
        }
        if self.target != target_frame_rank(rank) {
            return Err(Error::Certificate(format!("target {} is wrong", self.target)));
        }
        if self.extremal != (rank > 0 && frame_rank == self.target) {
            return Err(Error::Certificate("extremal flag is wrong".into()));
        }
        self.check_facet(g)
    }
}

fn certify_facet(g: &Graph, facet: &Facet) -> Result<ExtremalCertificate> {
    let cert = match &facet.source {
        FacetSource::Edge { edge, sign } => edge_matrix(g, *edge, *sign)?,
        FacetSource::Cycle { cycle, flipped } => {
            let positions: Vec<usize> = flipped
                .iter()
                .map(|e| cycle.position(*e).expect("flipped edges lie on the cycle"))
                .collect();
            let rep = embed(g, cycle, &delta_gram(cycle.len(), &positions)?)?;
            ExtremalCertificate::for_matrix(g, rep.gram(), Some(facet.ineq.clone()), -1)?
        }
    };
    cert.verify(g)?;
    if cert.facet.as_ref() != Some(&facet.ineq) {
        return Err(Error::Certificate("certificate carries a different facet".into()));
    }
    if rat(cert.rank as i64) != *facet.rhs() {
        return Err(Error::Certificate(format!(
            "rank {} differs from right-hand side {}",
            cert.rank,
            facet.rhs()
        )));
    }
    if !cert.extremal {
        return Err(Error::Certificate(format!(
            "frame rank {} below target {}",
            cert.frame_rank, cert.target
        )));
    }
    Ok(cert)
}

/// One verified extremal certificate per facet of `CUT±(G)`, in the order of
/// the facet list.
pub fn certify_frip_k5free(g: &Graph) -> Result<Vec<ExtremalCertificate>> {
    facet_system(g)?.iter().map(|f| certify_facet(g, f)).collect()
}

/// [`certify_frip_k5free`] with the facets certified in parallel; the output
/// is identical.
pub fn certify_frip_k5free_parallel(g: &Graph) -> Result<Vec<ExtremalCertificate>> {
    facet_system(g)?.par_iter().map(|f| certify_facet(g, f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn rank_counts(certs: &[ExtremalCertificate]) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for c in certs {
            *out.entry(c.rank).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn c4() {
        let certs = certify_frip_k5free(&Graph::cycle(4)).unwrap();
        assert_eq!(rank_counts(&certs), BTreeMap::from([(1, 8), (2, 8)]));
    }

    #[test]
    fn k33_parallel_matches() {
        let g = Graph::complete_bipartite(3, 3);
        let seq = certify_frip_k5free(&g).unwrap();
        assert_eq!(rank_counts(&seq), BTreeMap::from([(1, 18), (2, 72)]));
        assert_eq!(seq, certify_frip_k5free_parallel(&g).unwrap());
    }

    #[test]
    fn tree_has_only_edges() {
        let g = Graph::new(5, [(1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let certs = certify_frip_k5free(&g).unwrap();
        assert_eq!(certs.len(), 8);
        assert!(certs.iter().all(|c| c.rank == 1 && c.sign == 1));
    }

    #[test]
    fn k5_rejected() {
        assert_eq!(
            certify_frip_k5free(&Graph::complete(5)),
            Err(Error::ForbiddenMinor("K_5"))
        );
    }

    #[test]
    fn tampering_is_caught() {
        let g = Graph::cycle(4);
        let good = certify_frip_k5free(&g).unwrap().pop().unwrap();
        let mut c = good.clone();
        c.frame_rank += 1;
        assert!(c.verify(&g).is_err());
        let mut c = good.clone();
        c.sign = -c.sign;
        assert!(c.verify(&g).is_err());
        let mut c = good.clone();
        c.extremal = false;
        assert!(c.verify(&g).is_err());
        let mut c = good;
        c.matrix.set(0, 2, rat(1));
        assert!(c.verify(&g).is_err());
    }
}
