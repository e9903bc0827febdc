use thiserror::Error;

use crate::coloring::VerificationReport;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("length set is empty")]
    EmptyLengthSet,

    #[error("length {length} is outside 1..={max} for n = {n}")]
    LengthOutOfRange { length: usize, n: usize, max: usize },

    #[error("graph needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },

    #[error("coloring has {got} entries, expected {expected}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("edge coloring keys do not match the edge set: {0}")]
    KeySetMismatch(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("generated coloring failed verification")]
    ConstructionNotVerified(Box<VerificationReport>),

    #[error("not a difference set: difference {difference} is represented {count} times")]
    NotDifferenceSet { difference: usize, count: usize },

    #[error("bad cardinality: {0}")]
    BadCardinality(String),

    #[error("no difference set found for order {q} (n = {n})")]
    NotFound { q: usize, n: usize },

    #[error("length set cannot be split into perfect matchings: {0}")]
    NotDecomposable(String),

    #[error("instance exceeds search budget: {0}")]
    BudgetExceeded(String),

    #[error("time limit of {0} s reached with no usable witness")]
    TimeLimit(u64),

    #[error("malformed difference-set table at line {line}: {reason}")]
    TableFormat { line: usize, reason: String },

    #[error("certificate: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
