use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for a graph with {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("orientation has {found} arcs, graph has {expected} edges")]
    OrientationShape { expected: usize, found: usize },
    #[error("expected {expected} vertex weights, found {found}")]
    WeightCount { expected: usize, found: usize },
    #[error(
        "vertex {0} has a negative cost; Min-1-Light with negative costs is NP-hard \
         (it contains Min-1-Heavy) and is not supported"
    )]
    NegativeWeight(usize),
}

/// Failure while reading a graph or weights file. Line numbers are 1-based.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { line: usize, label: usize, n: usize },
    #[error("line {line}: self-loop at vertex {label}")]
    SelfLoop { line: usize, label: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error(
        "line {line}: negative cost for vertex {label}; Min-1-Light with negative costs is \
         NP-hard (it contains Min-1-Heavy) and is not supported"
    )]
    NegativeWeight { line: usize, label: usize },
    #[error("weight scale exceeds 18 decimal digits")]
    ScaleOverflow,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("vertex {vertex} has degree {degree}; the gadget construction needs degree >= 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edge weight of edge {0} is negative")]
    NegativeWeight(usize),
    #[error("expected {expected} edge weights, found {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("invalid matching: {0}")]
    Invalid(String),
    #[error("matching is not maximal: edge {0} has both endpoints exposed")]
    NotMaximal(usize),
    #[error("connecting vertex of edge {0} is matched on both sides")]
    DoublyMatchedConnector(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {edges} edges, oracle budget allows {budget}")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("oracle budget caps must be positive")]
    InvalidBudget,
    #[error(transparent)]
    Graph(#[from] GraphError),
}
