use thiserror::Error;

/// Errors produced by graph, group and flow operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("group syntax error at position {position}: {message}")]
    GroupParse { position: usize, message: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("allowed edges do not connect all vertices")]
    Disconnected,

    #[error("vertex {vertex} has odd degree in the edge set")]
    OddDegree { vertex: usize },

    #[error("group element does not match group {0}")]
    SpecMismatch(String),

    #[error("{what}: {needed} exceeds cap {cap}")]
    CapExceeded { what: &'static str, needed: String, cap: u64 },

    #[error("k = {0} is not supported")]
    UnsupportedK(usize),

    #[error("group of order {order} is too small (need at least 6)")]
    GroupTooSmall { order: u64 },

    #[error("not found: {0}")]
    NotFound(String),

    /// `index` is 0-based; the message is 1-based like flow files.
    #[error("flow {}: {reason}", index + 1)]
    InvalidFamilyMember { index: usize, reason: String },

    #[error("family has {got} flows but the guaranteed bound is {needed}")]
    GuaranteeViolated { needed: u64, got: u64 },

    #[error("budget exhausted: {0}")]
    BudgetExceeded(String),

    /// A proof step that cannot fail did fail; always a bug or a counterexample.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::PreconditionViolated(msg.into()))
}
