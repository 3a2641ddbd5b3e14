use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not alternating: {0}")]
    NotAlternating(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("polynomial parse error: {0}")]
    Polynomial(String),

    #[error("certificate parse error at line {line}: {message}")]
    Certificate { line: usize, message: String },

    #[error("matrix parse error at line {line}: {message}")]
    Matrix { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not a tree")]
    NotATree,

    #[error("{what} limited to n <= {cap}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
