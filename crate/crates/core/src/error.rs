use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),

    #[error("vertex map is not injective: {0} is hit twice")]
    NotInjective(usize),

    #[error("{what} exceeds the supported bound ({value} > {limit})")]
    SizeGuard {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("similarity matrix is not an involution")]
    NotInvolutory,

    #[error("vertex sets overlap at {0}")]
    SetsOverlap(usize),

    #[error("vertex sets differ in size: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("vertex sets must be non-empty")]
    EmptySet,

    #[error("induced subgraph on {0} is not empty")]
    NonEmptyInducedSet(&'static str),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// True for malformed input (text that does not describe a valid object),
    /// false for well-formed input that violates an operation's precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Graph6(_)
                | Error::Parse { .. }
                | Error::VertexOutOfRange { .. }
                | Error::SelfLoop(_)
                | Error::DuplicateEdge(..)
                | Error::DuplicateVertex(_)
                | Error::NotInjective(_)
                | Error::SetsOverlap(_)
                | Error::SizeMismatch(..)
                | Error::EmptySet
                | Error::NonEmptyInducedSet(_)
                | Error::InvalidInvolution(_)
                | Error::InvalidPlan(_)
        )
    }
}
