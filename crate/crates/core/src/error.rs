use thiserror::Error;

use crate::index::Index;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid word {0:?}: expected a string over '0' and '1' (at most 128 letters)")]
    InvalidWord(String),

    #[error("invalid index {0:?}: expected comma-separated positive integers, e.g. \"3,2\" (empty string for the empty index)")]
    InvalidIndex(String),

    #[error("invalid rational {0:?}: expected \"p\" or \"p/q\"")]
    InvalidRational(String),

    #[error("word {0} is not in h0 (must start and end with letter 1)")]
    NotInH0(String),

    #[error("word {0} is not in h (the empty word is excluded)")]
    NotInH(String),

    #[error("index {0} is not admissible (last part must be at least 2)")]
    NotAdmissible(Index),

    #[error("division by 2*pi*i is not exact: the constant term in 2*pi*i does not vanish")]
    NonExactDivision,

    #[error("variable count mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("precision too low: {0}")]
    Precision(String),

    #[error("exact rank computation refused for weight {k}: configured bound is {bound}")]
    ExactBoundExceeded { k: usize, bound: usize },

    #[error("weight {0} is outside the supported range for relation matrices")]
    WeightOutOfRange(usize),

    #[error("{0} is not a usable prime modulus (need an odd prime below 2^62)")]
    BadPrime(u64),

    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed JSON document: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
