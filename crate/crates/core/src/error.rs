use thiserror::Error;

use crate::graph::{Color, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(Vertex, Vertex),
    #[error("coloring has {got} colors for {expected} edges")]
    ColorCountMismatch { expected: usize, got: usize },
    #[error("color ids must be positive, got {0}")]
    NonPositiveColor(i64),
    #[error("color map is not injective: colors {0} and {1} both map to {2}")]
    NonInjectiveColorMap(Color, Color, Color),
    #[error("color map has no image for color {0}")]
    IncompleteColorMap(Color),
    #[error("path length k must be at least {min}, got {k}")]
    InvalidPathLength { k: usize, min: usize },
    #[error("max_colors must be at least 1")]
    InvalidColorBound,

    #[error("graph6: {0}")]
    Graph6(String),
    #[error("sparse6 input is not supported")]
    Sparse6Unsupported,
    #[error("graph6 supports at most {max} vertices here, got {n}")]
    Graph6TooLarge { n: usize, max: usize },
    #[error("malformed colored-graph document: {0}")]
    Document(String),

    #[error("oracle guard: {edges} edges exceeds the limit of {limit}")]
    OracleGuard { edges: usize, limit: usize },
    #[error("canonical forms support at most 64 vertices, got {0}")]
    CanonTooLarge(usize),
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error("invalid construction: {0}")]
    Construction(String),
    #[error("built-in enumeration is capped at n = {cap}, got n = {n}; supply a graph6 source")]
    EnumerationCap { n: usize, cap: usize },
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
