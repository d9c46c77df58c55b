//! Subset sums of finite multisets of powers of a fixed base `d > 1`.
//!
//! A [`DCollection`] over base `d` holds `a_i` tokens of value `d^i`. Its span
//! is the set of all sums of sub-multisets. This crate computes normal forms
//! under span-preserving exchanges, splits normal collections into irreducible
//! blocks, and answers membership, minimum-excluded-value, cardinality,
//! enumeration, span-equality and exchange-safety queries from that
//! structure. The [`oracle`] module recomputes spans by brute force for
//! checking.

pub mod cli;
pub mod collection;
pub mod error;
pub mod oracle;
pub mod span;

pub use collection::{dominates, DCollection, ExchangeSchedule};
pub use error::{Error, Result};
pub use oracle::{oracle_contains, oracle_equal, oracle_span, Oracle, SpanSet};
pub use span::{
    contains, critical_indices, decompose, enumerate_span, exchange_preserves_span, mex,
    span_equal, span_profile, span_size, Decomposition, IrreducibleBlock,
};
