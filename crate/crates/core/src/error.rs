use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
    #[error("adjacency rows are not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("{n} vertices exceeds the supported maximum of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: byte {byte} at offset {offset} is outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6: payload has {got} bytes, expected {expected}")]
    Graph6Length { expected: usize, got: usize },
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: only the short form (n <= 62) is supported")]
    Graph6TooLarge,
    #[error("line {line}, column {column}: {message}")]
    EdgeList { line: usize, column: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no squarefree decomposition or roots")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval [{lo}, {hi}] does not isolate exactly one root (found {count})")]
    NotIsolating { lo: String, hi: String, count: usize },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("the value is not an eigenvalue of the graph")]
    NotAnEigenvalue,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no witness exists, contradicting the expected theorem: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edges ({0}, {1}) and ({2}, {3}) touch or are joined by an edge")]
    NotInduced(usize, usize, usize, usize),
}
