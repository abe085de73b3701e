//! Extremal rays of the cone of positive semidefinite matrices with a
//! graph-prescribed zero pattern, and the facets of the (±1)-cut polytope that
//! identify them.
//!
//! Everything that decides a certificate (ranks, PSD tests, facet checks) runs
//! in exact rational arithmetic.
//!
//! Module map:
//! - [`graph`]: graphs, cuts, chordless cycles and minor testing.
//! - [`exact`]: rationals, rank, PSD testing, Gram matrices and `B·diag(D)·Bᵀ`
//!   factorizations.
//! - [`cutpoly`]: cut vectors, the facet system of K5-minor-free graphs,
//!   switching and brute-force polyhedral oracles.
//! - [`extremal`]: the explicit extremal matrices, the frame-space criterion and
//!   facet-ray certificates.
//! - [`json`]: the JSON file formats shared with the command-line tool.

pub mod cutpoly;
mod error;
pub mod exact;
pub mod extremal;
pub mod graph;
pub mod json;

pub use error::{Error, Result};
pub use exact::{Matrix, Rat, SymMat};
pub use graph::{Cut, CycleSubgraph, Edge, Graph};
