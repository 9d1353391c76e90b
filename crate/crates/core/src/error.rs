use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge:?} does not have exactly {k} distinct vertices")]
    EdgeArity { edge: Vec<usize>, k: usize },
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("search space too large: {slots} candidate edges exceeds the guard of {guard}")]
    SearchTooLarge { slots: usize, guard: usize },
    #[error("dimension mismatch: expected {expected} weights, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("transposition ({0} {1}) is not an automorphism")]
    NotAutomorphism(usize, usize),
    #[error("alpha must be at least 1, got {0}")]
    BadAlpha(f64),
    #[error("deletion bound is void: w_u^alpha = {0} is not below 1/k")]
    BoundVoid(f64),
    #[error("hypergraph is not vertex-transitive; uniform weights are not known to be optimal")]
    NotVertexUniform,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bad_params(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}
