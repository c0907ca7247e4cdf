use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("graphs with {0} vertices are not supported (max 64)")]
    TooManyVertices(usize),
    #[error("endpoint out of range: edge ({u}, {v}) in a graph with {n} vertices")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    NotAGraphEdge(usize, usize),
    #[error("edge ({0}, {1}) is a tree edge, expected a cycle-edge")]
    TreeEdgeGiven(usize, usize),
    #[error("edge ({0}, {1}) is not a tree edge")]
    NotATreeEdge(usize, usize),
    #[error("vertex {0} is not universal")]
    NotUniversal(usize),
    #[error("spanning tree count {trees} exceeds the budget of {budget}")]
    BudgetExceeded { trees: BigUint, budget: u64 },
    #[error("(n, m) = ({n}, {m}) out of range: need n >= 2 and n-1 <= m <= n(n-1)/2")]
    OutOfRange { n: u64, m: u64 },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("degree sequence realization failed: {0}")]
    Unrealizable(String),
    #[error("no connected sample after {0} attempts")]
    RetryCapExceeded(u64),
    #[error("{0}")]
    EnumerationLimit(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

/// Edge-list parse failures. Line numbers are 1-based.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line 1: malformed header {0:?}, expected \"n m\"")]
    MalformedHeader(String),
    #[error("line {line}: malformed edge {text:?}, expected \"u v\"")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: endpoint out of range in {text:?} (n = {n})")]
    EndpointOutOfRange { line: usize, text: String, n: usize },
    #[error("line {line}: duplicate edge {text:?}")]
    DuplicateEdge { line: usize, text: String },
    #[error("line {line}: self-loop {text:?}")]
    SelfLoop { line: usize, text: String },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line 1: graph must have between 1 and 64 vertices, got {0}")]
    VertexCount(usize),
}
