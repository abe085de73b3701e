use thiserror::Error;

use crate::graph::Edge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{edge} is not an edge of the graph")]
    NotAnEdge { edge: Edge },

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("not a cutset of a cycle: {0}")]
    NotACycleCutset(String),

    #[error("subset must have odd cardinality, got {0}")]
    EvenSubset(usize),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not positive semidefinite")]
    NotPsd,

    #[error("matrix is nonzero on nonedge {edge}")]
    ZeroPattern { edge: Edge },

    #[error("trace must be positive")]
    NonPositiveTrace,

    #[error("theorem inapplicable: graph has a {0} minor")]
    ForbiddenMinor(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("scale guard exceeded: {0}")]
    ScaleGuard(String),

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("certificate failed verification: {0}")]
    Certificate(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input could not be read into a well-formed value, as opposed to a
    /// well-formed value that violates an operation's precondition.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidGraph(_) | Error::NotSymmetric
        )
    }

    /// Stable snake-case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGraph(_) => "invalid_graph",
            Error::NotAnEdge { .. } => "not_an_edge",
            Error::InvalidCut(_) => "invalid_cut",
            Error::InvalidCycle(_) => "invalid_cycle",
            Error::NotACycleCutset(_) => "not_a_cycle_cutset",
            Error::EvenSubset(_) => "even_subset",
            Error::Dimension(_) => "dimension",
            Error::NotSymmetric => "not_symmetric",
            Error::NotPsd => "not_psd",
            Error::ZeroPattern { .. } => "zero_pattern",
            Error::NonPositiveTrace => "non_positive_trace",
            Error::ForbiddenMinor(_) => "forbidden_minor",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::ScaleGuard(_) => "scale_guard",
            Error::Unbounded => "unbounded",
            Error::Certificate(_) => "certificate",
            Error::Parse(_) => "parse",
        }
    }
}
