use thiserror::Error;

/// Errors produced while building root data or verifying arrangements.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid root system type `{input}`: {reason}")]
    InvalidType { input: String, reason: String },

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("root index {index} out of range (system has {count} positive roots)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("{0:?} is not a positive root of this system")]
    NotAPositiveRoot(Vec<i64>),

    #[error("highest root is ambiguous for the reducible system {0}")]
    Reducible(String),

    #[error("not a partition: i_{index} = {left} < i_{next} = {right}", next = index + 1)]
    NotAPartition {
        index: usize,
        left: usize,
        right: usize,
    },

    #[error("height-1 layer has {count} roots but the rank is {rank}")]
    FirstLayerTooLarge { count: usize, rank: usize },

    #[error("truncation {t} exceeds the number of positive roots {count}")]
    TruncationOutOfRange { t: usize, count: usize },

    #[error("prime {prime} rejected: {reason}")]
    InvalidPrime { prime: u64, reason: String },

    #[error("need at least {needed} distinct primes, got {got}")]
    NotEnoughPrimes { needed: usize, got: usize },

    #[error("roots passed as one layer have unequal heights")]
    UnequalHeights,

    #[error("root index {0} is not in the sub-root system")]
    NotInSubsystem(usize),

    #[error(
        "rank {rank} exceeds the symbolic rank limit {limit}; raise it with --rank-limit or IDEALARR_RANK_LIMIT"
    )]
    RankLimit { rank: usize, limit: usize },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
