use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used to map failures onto process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input, inconsistent parameters, violated preconditions.
    Validation,
    /// An exhaustive or dense routine refused an instance over its size guard.
    Guard,
    /// Everything else (I/O, serialization).
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("hypergraph must have at least one vertex")]
    NoVertices,
    #[error("edge {edge}: vertex {vertex} outside 1..={n}")]
    EdgeOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge} duplicates an earlier edge")]
    DuplicateEdge { edge: usize },
    #[error("edge {edge} has size {size}; edges need at least 2 vertices")]
    EdgeTooSmall { edge: usize, size: usize },
    #[error("edge {edge} lists vertex {vertex} more than once")]
    DuplicateVertexInEdge { edge: usize, vertex: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("infeasible generator model: {0}")]
    InfeasibleModel(String),
    #[error("invalid order: edge size {s} with tensor order {m}")]
    InvalidOrder { m: usize, s: usize },
    #[error("surjection count for order {m}, edge size {s} overflows 128 bits")]
    OmegaOverflow { m: usize, s: usize },
    #[error("edge of size {size} exceeds tensor order {order}")]
    EdgeLargerThanOrder { size: usize, order: usize },
    #[error("negative coordinate x[{index}] = {value}")]
    NegativeEntry { index: usize, value: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} outside 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("instance too large for {what}: {detail}")]
    InstanceTooLarge { what: &'static str, detail: String },
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("bound requires more than one edge")]
    TooFewEdges,
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("vector is constant")]
    ConstantVector,
    #[error("entry {index} is not strictly positive ({value})")]
    NonPositiveEntry { index: usize, value: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// An edge-level error located in an input file.
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::InstanceTooLarge { .. } | Error::OmegaOverflow { .. } => ErrorClass::Guard,
            Error::Io(_) | Error::Json(_) => ErrorClass::Internal,
            Error::AtLine { source, .. } => source.class(),
            _ => ErrorClass::Validation,
        }
    }
}
