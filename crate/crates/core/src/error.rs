use thiserror::Error;

/// Largest vertex count a [`Graph`](crate::Graph) can hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: n = {n} exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices { line: usize, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("graph6: byte {byte:#04x} at position {pos} is outside 63..=126")]
    Graph6BadChar { pos: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes of adjacency data, found {found}")]
    Graph6BadLength { expected: usize, found: usize },
    #[error("graph6: trailing garbage after adjacency data")]
    Graph6Trailing,
    #[error("family spec {spec:?}: {reason}")]
    Family { spec: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph would have {0} vertices; at most {MAX_VERTICES} are supported")]
    Capacity(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("negative coefficient at index {0}")]
    NegativeCoefficient(usize),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("I/O error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
