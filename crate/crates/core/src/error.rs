use thiserror::Error;

use crate::graph::edge_list::EdgeListError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {{{0},{1}}} already present")]
    EdgeExists(usize, usize),

    #[error("graph disconnected")]
    Disconnected,

    #[error("operation requires distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("operation requires at least {required} vertices, graph has {n}")]
    TooFewVertices { required: usize, n: usize },

    #[error("complement graph disconnected (largest Laplacian eigenvalue {lambda_max} reaches n = {n})")]
    ComplementDisconnected { lambda_max: f64, n: usize },

    #[error("invalid Cayley specification: {0}")]
    InvalidCayley(String),

    #[error("connection set does not generate the group")]
    NonGenerating,

    #[error("bit string has length {found}, expected {expected}")]
    BitLength { expected: usize, found: usize },

    #[error("bit string entries must be 0 or 1, found {0}")]
    BitValue(u8),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NotConverged { sweeps: usize },

    #[error("matrix is not positive definite (pivot {pivot} = {value})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
}
