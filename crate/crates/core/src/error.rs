use thiserror::Error;

use crate::model::Vertex;

/// Errors raised by graph loading, the access contracts and the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} is outside 1..=n")]
    VertexOutOfRange(Vertex),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} has an empty adjacency list")]
    EmptyList(Vertex),
    #[error("vertex {target} is not in the adjacency list of {vertex}")]
    TargetAbsent { vertex: Vertex, target: Vertex },
    #[error("position {pos} out of range for a list of length {len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("equal values cannot encode a bit")]
    EqualValues,
    #[error("value {value} does not fit in {width} bits")]
    ValueTooWide { value: u64, width: u32 },
    #[error("adjacency list of {vertex} holds an unassigned permutation")]
    CorruptEncoding { vertex: Vertex },
    #[error("vertex {vertex} has degree {degree}, need at least {needed}")]
    DegreeTooSmall { vertex: Vertex, degree: usize, needed: usize },
    #[error("vertex {0} has degree 2, which this algorithm cannot encode")]
    DegreeTwo(Vertex),
    #[error("workspace budget exceeded: {requested} bits requested with {budget} bits allowed")]
    BudgetExceeded { requested: u64, budget: u64 },
    #[error("{0}")]
    Unsupported(String),
    #[error("cancelled")]
    Cancelled,
    #[error("oracle limited to n <= {limit}, got {n}")]
    OracleLimit { n: usize, limit: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
