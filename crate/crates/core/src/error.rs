use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {{{inner}}} is contained in edge {{{outer}}}")]
    NotAClutter { inner: VertexSet, outer: VertexSet },

    #[error("empty hyperedge")]
    EmptyEdge,

    #[error("vertex {vertex} is outside the ground set 1..{n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ground set of {n} vertices exceeds the limit of {max}")]
    GroundSetTooLarge { n: usize, max: usize },

    #[error("rule {rule} requires a graph (every edge of size 2)")]
    RuleNotApplicable { rule: &'static str },

    #[error("the vertex set must be nonempty")]
    EmptySet,

    #[error("{{{0}}} is not an edge of the hypergraph")]
    NotAnEdge(VertexSet),

    #[error("the clutter contains the empty set")]
    EmptyMember,

    #[error("parameter {what}={value} out of range ({expected})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        expected: String,
    },

    #[error("exhaustive search on {n} vertices exceeds the search bound {bound}")]
    SearchBoundExceeded { n: usize, bound: usize },

    #[error("the uniform clutter U({k},{n}) has no {what} realization")]
    NotRealizable {
        n: usize,
        k: usize,
        what: &'static str,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable variant name, echoed by the CLI and the C API.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotAClutter { .. } => "NotAClutter",
            Error::EmptyEdge => "EmptyEdge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::GroundSetTooLarge { .. } => "GroundSetTooLarge",
            Error::RuleNotApplicable { .. } => "RuleNotApplicable",
            Error::EmptySet => "EmptySet",
            Error::NotAnEdge(_) => "NotAnEdge",
            Error::EmptyMember => "EmptyMember",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::SearchBoundExceeded { .. } => "SearchBoundExceeded",
            Error::NotRealizable { .. } => "NotRealizable",
            Error::Parse { .. } => "Parse",
        }
    }
}
