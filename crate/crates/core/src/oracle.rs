//! Brute-force reference for spans.
//!
//! Sums are tracked in a reachability table indexed by value, expanded once
//! per token. Nothing here depends on normal forms or decompositions, so the
//! fast procedures can be checked against it.

use num_bigint::BigUint;

use crate::collection::{same_base, DCollection};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_SUM: u64 = 1_000_000;

/// Sorted set of achievable sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanSet {
    elements: Vec<u64>,
}

impl SpanSet {
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elements.binary_search(&n).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max(&self) -> u64 {
        *self.elements.last().expect("a span always contains 0")
    }

    /// Smallest value not in the set.
    pub fn mex(&self) -> u64 {
        self.elements
            .iter()
            .zip(0u64..)
            .find(|(e, i)| *e != i)
            .map_or(self.elements.len() as u64, |(_, i)| i)
    }

    pub fn is_subset(&self, other: &SpanSet) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }
}

/// Brute-force span computation with a bound on the collection sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub max_sum: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self {
            max_sum: DEFAULT_MAX_SUM,
        }
    }
}

impl Oracle {
    pub fn new(max_sum: u64) -> Self {
        Self { max_sum }
    }

    pub fn span(&self, a: &DCollection) -> Result<SpanSet> {
        let sum = a.sum_value();
        let total = match u64::try_from(&sum) {
            Ok(total) if total <= self.max_sum => total as usize,
            _ => {
                return Err(Error::OracleBound {
                    sum,
                    bound: self.max_sum,
                })
            }
        };
        let mut reachable = vec![false; total + 1];
        reachable[0] = true;
        let mut high = 0;
        let mut token = 1usize;
        for (i, count) in a.mults().iter().enumerate() {
            if i > 0 {
                token *= a.base() as usize;
            }
            // Bounded by `total`, so the count fits.
            let count = usize::try_from(count).expect("multiplicity bounded by the sum");
            for _ in 0..count {
                for v in (0..=high).rev() {
                    if reachable[v] {
                        reachable[v + token] = true;
                    }
                }
                high += token;
            }
        }
        Ok(SpanSet {
            elements: (0..=total as u64)
                .filter(|&v| reachable[v as usize])
                .collect(),
        })
    }

    pub fn contains(&self, a: &DCollection, n: &BigUint) -> Result<bool> {
        let span = self.span(a)?;
        Ok(u64::try_from(n).is_ok_and(|n| span.contains(n)))
    }

    pub fn equal(&self, a: &DCollection, b: &DCollection) -> Result<bool> {
        Ok(self.span(a)? == self.span(b)?)
    }
}

pub fn oracle_span(a: &DCollection) -> Result<SpanSet> {
    Oracle::default().span(a)
}

pub fn oracle_contains(a: &DCollection, n: &BigUint) -> Result<bool> {
    Oracle::default().contains(a, n)
}

/// Compares spans as sets of integers. Collections over different bases are
/// allowed here.
pub fn oracle_equal(a: &DCollection, b: &DCollection) -> Result<bool> {
    Oracle::default().equal(a, b)
}

/// Same as [`oracle_equal`] but insists on a shared base.
pub fn oracle_equal_same_base(a: &DCollection, b: &DCollection) -> Result<bool> {
    same_base(a, b)?;
    oracle_equal(a, b)
}
