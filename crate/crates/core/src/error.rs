use thiserror::Error;

use crate::hypergraph::VertexRef;

/// Errors raised by hypergraph construction, the solvers and the generators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("position {position} out of range for class {class} of size {size}")]
    OutOfRange { class: usize, position: usize, size: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("bad arity: expected {expected}, found {found}")]
    BadArity { expected: usize, found: usize },
    #[error("degree level {level} exceeds uniformity {k}")]
    BadLevel { level: usize, k: usize },
    #[error("vertex sets overlap")]
    Overlap,
    #[error("{x} and {y} lie in different classes")]
    DifferentClass { x: VertexRef, y: VertexRef },
    #[error("shift requires position({x}) < position({y})")]
    NotOrdered { x: VertexRef, y: VertexRef },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("infeasible request: {0}")]
    Infeasible(String),
    #[error("edge {0:?} is not in the matching")]
    NotInMatching(Vec<usize>),
    #[error("instance too large: {0}")]
    TooLarge(String),
    /// The node limit was hit; `best` is the best certificate size seen so far
    /// (a lower bound for matchings, an upper bound for covers).
    #[error("node budget of {limit} exhausted (best so far: {best})")]
    Budget { limit: u64, best: usize },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
