use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has {n} vertices, oracle bound is {bound}")]
    BoundExceeded { n: usize, bound: usize },
    #[error("search budget exceeded ({0} candidate combinations)")]
    BudgetExceeded(u128),
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("not a perfect elimination ordering")]
    InvalidPeo,
    #[error("not bipartite")]
    NotBipartite,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid formula: {}", .0.join("; "))]
    InvalidFormula(Vec<String>),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("internal check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for refusals caused by size limits or inapplicable solvers,
    /// as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::BoundExceeded { .. }
                | Error::BudgetExceeded(_)
                | Error::NotForest
                | Error::NotChordal
                | Error::NotBipartite
                | Error::Unsupported(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
