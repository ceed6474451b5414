//! Error type shared across the crate.

/// Crate-wide error type.
///
/// `Parse` carries a 1-based line number so malformed input files can be
/// fixed by hand.  `Domain` flags a call whose arguments violate a
/// precondition, `Refusal` an input that is too large for the requested
/// exact computation, and `Invariant` an internal consistency failure that
/// should never be reachable from valid inputs.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("refused: {0}")]
    Refusal(String),
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn refusal(msg: impl Into<String>) -> Self {
        Error::Refusal(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
