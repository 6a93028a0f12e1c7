use num_bigint::BigInt;
use thiserror::Error;

/// Everything that can go wrong while deciding an inequality or scanning classes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot compare surds with unrelated radicands sqrt({0}) and sqrt({1})")]
    UnsupportedComparison(BigInt, BigInt),

    #[error("negative radicand {0}")]
    NegativeRadicand(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid class: {0}")]
    InvalidClass(String),

    #[error("beta = k/(g-1) is undefined for g = 1")]
    UndefinedBeta,

    #[error("x = delta/C^2 is undefined for C^2 = 0")]
    UndefinedRatio,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("impossible configuration: {0}")]
    Impossible(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("candidate budget exceeded: {candidates} candidates, limit {limit} (partial result)")]
    Budget { candidates: BigInt, limit: u64 },

    #[error("cannot parse {0:?}: {1}")]
    Parse(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
