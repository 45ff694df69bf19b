use thiserror::Error;

/// Errors surfaced by the library and mapped onto CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid distance set: {0}")]
    InvalidDistanceSet(String),

    #[error("expected a distance set of size {expected}, got {found}")]
    InvalidArity { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed witness: {0}")]
    InvalidWitness(String),

    /// A solver cap (states, interval length or wall time) was hit before a decision.
    #[error("undecided: {0}")]
    Undecided(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
