use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coordinate out of range: {0}")]
    Coordinate(String),

    /// Structurally malformed input (overlapping holes, wrong size sum, broken matching).
    #[error("invalid input: {0}")]
    Validation(String),

    /// Well-formed input that does not satisfy an operation's precondition,
    /// e.g. an arrangement that is not spread-out.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("flip not applicable: {0}")]
    Flip(String),

    #[error("degenerate polygon has zero signed area")]
    Degenerate,

    #[error("resource limit exceeded: more than {limit} {what}")]
    Resource { limit: usize, what: &'static str },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported input: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
