use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A block list is not a partition of the ground set, or violates a structural invariant.
    #[error("malformed partition: {0}")]
    Structural(String),
    /// A textual or JSON literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A series or scalar has no inverse.
    #[error("not invertible: {0}")]
    NotInvertible(String),
    /// A documented precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A moment was requested for a word longer than the space supports.
    #[error("word `{word}` exceeds the degree bound {bound}")]
    BeyondDegreeBound { word: String, bound: usize },
    /// A moment table has no entry for the requested word.
    #[error("no moment recorded for word `{0}`")]
    MissingMoment(String),
}

pub type Result<T> = std::result::Result<T, Error>;
