use graphcurve_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph document: {0}")]
    Json(String),

    #[error("a graph needs at least one vertex")]
    Empty,

    #[error("vertex {vertex} out of range for {d} vertices")]
    VertexOutOfRange { vertex: usize, d: usize },

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("unsatisfiable family: {0}")]
    Unsatisfiable(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("malformed labeling document: {0}")]
    Json(String),

    #[error("bad label {0:?}; expected \"e3\" or \"e3-e4\"")]
    BadLabel(String),

    #[error("vertex {0} has degree {1} > 3")]
    DegreeTooHigh(usize, usize),

    #[error("graph must have at least two vertices")]
    TooSmall,

    #[error("assumptions violated without override: {0}")]
    AssumptionViolated(String),

    #[error("trivalent vertices {0} and {1} are adjacent")]
    AdjacentTrivalent(usize, usize),

    #[error("no labeling avoids two difference labels at one vertex")]
    NoConsistentChoice,

    #[error("edge {0} is not in the augmented graph")]
    UnknownEdge(String),

    #[error("edge {0} is labeled more than once")]
    DuplicateLabel(String),

    #[error("edge {0} has no label")]
    MissingLabel(String),

    #[error("expected {expected} distinct indices 0..={max}, found {found:?}")]
    IndexCount { expected: usize, max: usize, found: Vec<usize> },

    #[error("index {0} is used by more than one single label")]
    IndexReused(usize),

    #[error("inconsistent label triple at trivalent vertex {0}")]
    TrivalentTriple(usize),

    #[error("vertex {0} meets two difference labels")]
    TwoDifferences(usize),

    #[error("difference label {0} is not attached to a trivalent vertex triple")]
    StrayDifference(String),

    #[error("vertex {0} is not trivalent")]
    NotTrivalent(usize),
}

/// Top-level error for pipeline operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Labeling(#[from] LabelingError),

    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    #[error("{0}")]
    Io(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("golden file: {0}")]
    Golden(String),
}
