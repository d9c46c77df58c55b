//! Structure of the set of subset sums of a collection.
//!
//! A normal collection splits at its critical indices (places holding fewer
//! than `d - 1` tokens, plus the top place) into irreducible blocks. Each
//! block reaches every multiple of `d^shift` up to its sum, and the span of
//! the whole collection is the direct sum of those scaled intervals: every
//! achievable value has exactly one component per block.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::collection::{power, same_base, DCollection};
use crate::error::{Error, Result};

/// One segment `(shift - 1, top]` of the critical-index decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleBlock {
    shift: usize,
    top: usize,
    block_sum: BigUint,
    length: BigUint,
}

impl IrreducibleBlock {
    /// Exponent `p`: the block contributes multiples of `d^p`.
    pub fn shift(&self) -> usize {
        self.shift
    }

    /// The critical index closing the block.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Sum of the block's tokens.
    pub fn block_sum(&self) -> &BigUint {
        &self.block_sum
    }

    /// `block_sum / d^shift`; the block spans `d^shift * {0, 1, ..., length}`.
    pub fn length(&self) -> &BigUint {
        &self.length
    }
}

/// The span of a normal collection as a direct sum of scaled intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    base: u64,
    blocks: Vec<IrreducibleBlock>,
}

impl Decomposition {
    pub fn base(&self) -> u64 {
        self.base
    }

    /// Blocks in increasing order of shift.
    pub fn blocks(&self) -> &[IrreducibleBlock] {
        &self.blocks
    }

    pub fn is_irreducible(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn total(&self) -> BigUint {
        self.blocks.iter().map(|b| &b.block_sum).sum()
    }

    fn unit(&self, block: &IrreducibleBlock) -> BigUint {
        power(self.base, block.shift)
    }

    /// Per-block components of `n`, lowest block first, or `None` when `n` is
    /// not in the span. Components are extracted greedily from the highest
    /// block down, each clamped at the block length.
    pub fn components(&self, n: &BigUint) -> Option<Vec<BigUint>> {
        let mut rest = n.clone();
        let mut out = vec![BigUint::zero(); self.blocks.len()];
        for (slot, block) in out.iter_mut().zip(&self.blocks).rev() {
            let unit = self.unit(block);
            let take = (&rest / &unit).min(block.length.clone());
            rest -= &take * &unit;
            *slot = take;
        }
        rest.is_zero().then_some(out)
    }

    pub fn value_of(&self, components: &[BigUint]) -> BigUint {
        components
            .iter()
            .zip(&self.blocks)
            .map(|(c, b)| c * self.unit(b))
            .sum()
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        if n > &self.total() {
            return false;
        }
        self.components(n).is_some()
    }

    /// Number of elements: the product of `length + 1` over blocks.
    pub fn size(&self) -> BigUint {
        self.blocks.iter().map(|b| &b.length + 1u32).product()
    }

    /// Smallest value outside the span.
    pub fn mex(&self) -> BigUint {
        match self.blocks.as_slice() {
            [first, _, ..] => &first.block_sum + 1u32,
            _ => self.total() + 1u32,
        }
    }

    /// Span elements in increasing order.
    pub fn iter(&self) -> SpanIter {
        SpanIter {
            units: self.blocks.iter().map(|b| self.unit(b)).collect(),
            lengths: self.blocks.iter().map(|b| b.length.clone()).collect(),
            digits: vec![BigUint::zero(); self.blocks.len()],
            value: Some(BigUint::zero()),
        }
    }
}

/// Mixed-radix odometer over block components. The highest block is the most
/// significant digit; since the blocks below any block sum to less than its
/// unit, odometer order is numeric order.
#[derive(Debug, Clone)]
pub struct SpanIter {
    units: Vec<BigUint>,
    lengths: Vec<BigUint>,
    digits: Vec<BigUint>,
    value: Option<BigUint>,
}

impl Iterator for SpanIter {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        let current = self.value.take()?;
        let mut next = current.clone();
        for ((digit, unit), length) in self.digits.iter_mut().zip(&self.units).zip(&self.lengths) {
            if &*digit < length {
                *digit += 1u32;
                next += unit;
                self.value = Some(next);
                break;
            }
            next -= &*digit * unit;
            digit.set_zero();
        }
        Some(current)
    }
}

/// Places `j` with `a_j < d - 1`, followed by the top index.
pub fn critical_indices(a: &DCollection) -> Result<Vec<usize>> {
    check_normal(a)?;
    let top = a.top().ok_or(Error::Empty)?;
    let low = BigUint::from(a.base() - 1);
    Ok((0..top)
        .filter(|&j| a.multiplicity(j) < &low)
        .chain(std::iter::once(top))
        .collect())
}

/// Splits a normal collection into irreducible blocks.
pub fn decompose(a: &DCollection) -> Result<Decomposition> {
    let critical = critical_indices(a)?;
    let mut blocks = Vec::with_capacity(critical.len());
    let mut shift = 0;
    for top in critical {
        let unit = power(a.base(), shift);
        let mut length = BigUint::zero();
        let mut scale = BigUint::one();
        for t in shift..=top {
            length += a.multiplicity(t) * &scale;
            scale *= a.base();
        }
        blocks.push(IrreducibleBlock {
            shift,
            top,
            block_sum: &length * &unit,
            length,
        });
        shift = top + 1;
    }
    Ok(Decomposition {
        base: a.base(),
        blocks,
    })
}

/// Decomposition of the normal form; the empty collection has no blocks.
pub fn span_profile(a: &DCollection) -> Decomposition {
    let normal = a.normalize();
    if normal.is_empty() {
        return Decomposition {
            base: a.base(),
            blocks: Vec::new(),
        };
    }
    decompose(&normal).expect("normal form of a nonempty collection decomposes")
}

pub fn contains(a: &DCollection, n: &BigUint) -> bool {
    if n > &a.sum_value() {
        return false;
    }
    span_profile(a).contains(n)
}

pub fn mex(a: &DCollection) -> BigUint {
    span_profile(a).mex()
}

pub fn span_size(a: &DCollection) -> BigUint {
    span_profile(a).size()
}

/// The first `limit` span elements in increasing order.
pub fn enumerate_span(a: &DCollection, limit: usize) -> Result<Vec<BigUint>> {
    if limit == 0 {
        return Err(Error::ZeroLimit);
    }
    Ok(span_profile(a).iter().take(limit).collect())
}

/// Whether the two collections have the same span, decided by comparing
/// normal forms.
pub fn span_equal(a: &DCollection, b: &DCollection) -> Result<bool> {
    same_base(a, b)?;
    Ok(a.normalize() == b.normalize())
}

/// Whether exchanging at `i` leaves the span unchanged: true exactly when
/// place `i` still exceeds `2(d - 1)` after sweeping the places below it.
pub fn exchange_preserves_span(a: &DCollection, i: usize) -> Result<bool> {
    // Validates the exchange itself.
    a.exchange(i)?;
    Ok(a.normalize_up_to(i).is_proper_exchange(i))
}

fn check_normal(a: &DCollection) -> Result<()> {
    match a.first_non_normal() {
        Some(index) => Err(Error::NotNormal {
            index,
            bound: a.normal_bound(),
        }),
        None => Ok(()),
    }
}
