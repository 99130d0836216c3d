//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by graph construction, parsing and the exact solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0} is not allowed")]
    LoopEdge(usize),

    #[error("order {0} exceeds the {max} vertex cap", max = crate::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),

    #[error("edge ({0}, {1}) is already present")]
    EdgeExists(usize, usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list: {0}")]
    EdgeList(String),

    #[error("undefined on graphs with isolated vertices")]
    IsolatedVertex,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("{what}: order {n} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("dimacs: {0}")]
    Dimacs(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    /// A structural recognizer and an exhaustive search disagreed. This can
    /// only happen if one of the verified statements is false, so it is
    /// reported loudly together with a reproducible counterexample.
    #[error("internal inconsistency: {detail}; counterexample graph6: {graph6}")]
    Inconsistency { detail: String, graph6: String },
}

pub type Result<T> = std::result::Result<T, Error>;
