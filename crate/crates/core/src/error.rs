use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by collection construction and the span procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    InvalidBase(u64),

    #[error("multiplicity at index {index} is negative")]
    NegativeMultiplicity { index: usize },

    #[error("cannot exchange at index {index}: multiplicity {multiplicity} is below base {base}")]
    InvalidExchange {
        index: usize,
        multiplicity: BigUint,
        base: u64,
    },

    #[error("collections have different bases ({left} and {right})")]
    BaseMismatch { left: u64, right: u64 },

    #[error("collection is not normal: multiplicity at index {index} exceeds {bound}")]
    NotNormal { index: usize, bound: u64 },

    #[error("collection is empty")]
    Empty,

    #[error("sum {sum} exceeds the oracle bound {bound}")]
    OracleBound { sum: BigUint, bound: u64 },

    #[error("enumeration limit must be positive")]
    ZeroLimit,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
