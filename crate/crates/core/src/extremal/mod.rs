//! Extremal matrices of `S^p_{⪰0}(G)` and their certificates.
//!
//! A PSD matrix `X` of rank `k` with Gram vectors `u_1, …, u_p ∈ ℚ^k` is
//! extremal in `S^p_{⪰0}(G)` iff the frame matrices `u_i u_jᵀ + u_j u_iᵀ` over
//! the nonedges `{i, j}` span a space of dimension `k(k+1)/2 − 1`.

mod certify;
mod construct;
mod frame;
mod order;

use num_traits::Zero;

use crate::exact::{rank, Matrix, Rat};
use crate::graph::Graph;
use crate::{Error, Result};

pub use certify::{certify_frip_k5free, certify_frip_k5free_parallel, ExtremalCertificate};
pub use construct::{delta_gram, delta_matrix, delta_max_gram, edge_gram, edge_matrix, embed};
pub use frame::{frame_space_rank, is_extremal, target_frame_rank};
pub use order::{extremal_rank_set_series_parallel, polar_point, sparsity_order_bounds, OrderBounds, RankSet};

/// Vectors `u_1, …, u_p` in `ℚ^k` with `u_i · u_j = 0` on every nonedge of
/// the host and spanning `ℚ^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramRep {
    host: Graph,
    vectors: Vec<Vec<Rat>>,
}

impl GramRep {
    pub fn new(host: Graph, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        if vectors.len() != host.order() {
            return Err(Error::Dimension(format!(
                "{} vectors for {} vertices",
                vectors.len(),
                host.order()
            )));
        }
        let k = vectors.first().map_or(0, Vec::len);
        if vectors.iter().any(|v| v.len() != k) {
            return Err(Error::Dimension("vectors of different lengths".into()));
        }
        for e in host.nonedges() {
            if !crate::exact::dot(&vectors[e.lo() - 1], &vectors[e.hi() - 1]).is_zero() {
                return Err(Error::ZeroPattern { edge: e });
            }
        }
        let span = rank(&Matrix::from_rows(vectors.clone())?);
        if span != k {
            return Err(Error::Dimension(format!(
                "vectors span dimension {span}, not the ambient {k}"
            )));
        }
        Ok(GramRep { host, vectors })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    /// Ambient dimension `k`.
    pub fn dim(&self) -> usize {
        self.vectors.first().map_or(0, Vec::len)
    }

    pub fn vectors(&self) -> &[Vec<Rat>] {
        &self.vectors
    }

    pub fn gram(&self) -> crate::exact::SymMat {
        crate::exact::gram(&self.vectors).expect("validated vectors")
    }
}
