use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The input is well formed but outside the operation's domain
    /// (isolated vertex, non-tree, parameter out of range, ...).
    #[error("{0}")]
    Domain(String),

    /// The node budget ran out before the search was proven complete.
    #[error("node budget exhausted after {nodes} nodes; value lies in [{lower}, {upper}]")]
    BudgetExceeded {
        lower: usize,
        upper: usize,
        nodes: u64,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by bad caller input (as opposed to search limits
    /// or internal failures).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::BudgetExceeded { .. } | Error::Internal(_))
    }
}
