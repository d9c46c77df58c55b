//! Multisets of powers of a fixed base, stored as multiplicity sequences.
//!
//! A collection over base `d` is written `(a_0, a_1, ..., a_k)` where `a_i`
//! counts the tokens of value `d^i`. The stored sequence never carries a
//! trailing zero, so two collections are equal exactly when they hold the same
//! tokens.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

static ZERO: BigUint = BigUint::ZERO;

/// A finite multiset of powers of `base`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DCollection {
    base: u64,
    mults: Vec<BigUint>,
}

/// Indices at which exchanges are attempted, in order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExchangeSchedule {
    steps: Vec<usize>,
}

impl ExchangeSchedule {
    pub fn new(steps: Vec<usize>) -> Self {
        Self { steps }
    }

    pub fn steps(&self) -> &[usize] {
        &self.steps
    }
}

impl From<Vec<usize>> for ExchangeSchedule {
    fn from(steps: Vec<usize>) -> Self {
        Self::new(steps)
    }
}

impl FromIterator<usize> for ExchangeSchedule {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl DCollection {
    /// Builds a collection from signed multiplicities, rejecting negative
    /// entries and bases below 2. Trailing zeros are trimmed.
    pub fn new<I, T>(base: u64, mults: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        check_base(base)?;
        let mults = mults
            .into_iter()
            .enumerate()
            .map(|(index, m)| {
                let m: BigInt = m.into();
                match m.sign() {
                    Sign::Minus => Err(Error::NegativeMultiplicity { index }),
                    _ => Ok(m.magnitude().clone()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(base, mults))
    }

    /// Builds a collection from unsigned multiplicities.
    pub fn from_biguints(base: u64, mults: Vec<BigUint>) -> Result<Self> {
        check_base(base)?;
        Ok(Self::from_parts(base, mults))
    }

    pub fn empty(base: u64) -> Result<Self> {
        Self::from_biguints(base, Vec::new())
    }

    fn from_parts(base: u64, mut mults: Vec<BigUint>) -> Self {
        trim(&mut mults);
        Self { base, mults }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Canonical multiplicities; the last entry, if any, is nonzero.
    pub fn mults(&self) -> &[BigUint] {
        &self.mults
    }

    /// Multiplicity of `d^i`; zero past the end of the sequence.
    pub fn multiplicity(&self, i: usize) -> &BigUint {
        self.mults.get(i).unwrap_or(&ZERO)
    }

    /// Index of the largest token present.
    pub fn top(&self) -> Option<usize> {
        self.mults.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// The largest multiplicity a normal collection may hold, `2(d - 1)`.
    pub fn normal_bound(&self) -> u64 {
        2 * (self.base - 1)
    }

    /// Value of the token `d^i`.
    pub fn token(&self, i: usize) -> BigUint {
        power(self.base, i)
    }

    /// Sum of all tokens with multiplicity.
    pub fn sum_value(&self) -> BigUint {
        // Horner from the top place down.
        let d = BigUint::from(self.base);
        self.mults
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, a| acc * &d + a)
    }

    pub fn token_count(&self) -> BigUint {
        self.mults.iter().sum()
    }

    /// Sum of squares of the token values, `sum a_i * d^(2i)`. Every
    /// elementary exchange strictly increases it.
    pub fn token_square_sum(&self) -> BigUint {
        let d2 = BigUint::from(self.base) * self.base;
        self.mults
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, a| acc * &d2 + a)
    }

    /// Replaces `d` tokens `d^i` by one token `d^(i+1)`.
    pub fn exchange(&self, i: usize) -> Result<Self> {
        if self.multiplicity(i) < &BigUint::from(self.base) {
            return Err(Error::InvalidExchange {
                index: i,
                multiplicity: self.multiplicity(i).clone(),
                base: self.base,
            });
        }
        let mut mults = self.mults.clone();
        apply_exchanges(&mut mults, i, &BigUint::one(), self.base);
        Ok(Self::from_parts(self.base, mults))
    }

    /// Whether `a_i > 2(d - 1)`, the threshold at which an exchange at `i`
    /// cannot shrink the span.
    pub fn is_proper_exchange(&self, i: usize) -> bool {
        self.multiplicity(i) > &BigUint::from(self.normal_bound())
    }

    pub fn is_normal(&self) -> bool {
        self.first_non_normal().is_none()
    }

    pub(crate) fn first_non_normal(&self) -> Option<usize> {
        let bound = BigUint::from(self.normal_bound());
        self.mults.iter().position(|a| a > &bound)
    }

    /// Normal form: sweeps places upward, exchanging while a place holds more
    /// than `2(d - 1)` tokens.
    pub fn normalize(&self) -> Self {
        let mut mults = self.mults.clone();
        sweep(&mut mults, self.base, None);
        Self::from_parts(self.base, mults)
    }

    /// The same sweep, restricted to places strictly below `j`. Places at or
    /// above `j` receive carries but are never exchanged.
    pub fn normalize_up_to(&self, j: usize) -> Self {
        let mut mults = self.mults.clone();
        sweep(&mut mults, self.base, Some(j));
        Self::from_parts(self.base, mults)
    }

    /// Applies the scheduled exchanges that pass the proper threshold, skipping
    /// the rest, then finishes with [`normalize`](Self::normalize).
    pub fn normalize_with_schedule(&self, schedule: &ExchangeSchedule) -> Self {
        self.run_schedule(schedule, &mut |_, _, _| {}).normalize()
    }

    /// Like [`normalize_with_schedule`](Self::normalize_with_schedule), calling
    /// `on_exchange(before, index, after)` for every exchange performed. The
    /// closing sweep also goes one exchange at a time here, so the cost is
    /// linear in the number of exchanges.
    pub fn normalize_with_schedule_inspect<F>(
        &self,
        schedule: &ExchangeSchedule,
        mut on_exchange: F,
    ) -> Self
    where
        F: FnMut(&DCollection, usize, &DCollection),
    {
        let mut current = self.run_schedule(schedule, &mut on_exchange);
        let mut i = 0;
        while current.top().is_some_and(|k| i <= k) {
            while current.is_proper_exchange(i) {
                let next = current.exchange(i).expect("proper exchanges are valid");
                on_exchange(&current, i, &next);
                current = next;
            }
            i += 1;
        }
        current
    }

    fn run_schedule(
        &self,
        schedule: &ExchangeSchedule,
        on_exchange: &mut dyn FnMut(&DCollection, usize, &DCollection),
    ) -> Self {
        let mut current = self.clone();
        for &i in schedule.steps() {
            if !current.is_proper_exchange(i) {
                continue;
            }
            let next = current.exchange(i).expect("proper exchanges are valid");
            on_exchange(&current, i, &next);
            current = next;
        }
        current
    }
}

/// `A ⪯ B`: every multiplicity of `lower` is at most the matching one of
/// `upper`.
pub fn dominates(lower: &DCollection, upper: &DCollection) -> Result<bool> {
    same_base(lower, upper)?;
    Ok((0..lower.mults.len()).all(|i| lower.multiplicity(i) <= upper.multiplicity(i)))
}

pub(crate) fn same_base(a: &DCollection, b: &DCollection) -> Result<()> {
    if a.base != b.base {
        return Err(Error::BaseMismatch {
            left: a.base,
            right: b.base,
        });
    }
    Ok(())
}

pub(crate) fn power(base: u64, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

fn check_base(base: u64) -> Result<()> {
    if base < 2 {
        return Err(Error::InvalidBase(base));
    }
    Ok(())
}

fn trim(mults: &mut Vec<BigUint>) {
    while mults.last().is_some_and(Zero::is_zero) {
        mults.pop();
    }
}

/// Performs `count` exchanges at place `i` at once.
fn apply_exchanges(mults: &mut Vec<BigUint>, i: usize, count: &BigUint, base: u64) {
    mults[i] -= count * base;
    if i + 1 == mults.len() {
        mults.push(BigUint::zero());
    }
    mults[i + 1] += count;
}

fn sweep(mults: &mut Vec<BigUint>, base: u64, limit: Option<usize>) {
    let bound = BigUint::from(2 * (base - 1));
    let d = BigUint::from(base);
    let mut i = 0;
    // The sequence may grow as carries move upward.
    while i < mults.len() && limit.is_none_or(|j| i < j) {
        if mults[i] > bound {
            // Number of single exchanges until the place drops to the bound.
            let count = Integer::div_ceil(&(&mults[i] - &bound), &d);
            apply_exchanges(mults, i, &count, base);
        }
        i += 1;
    }
}

impl fmt::Display for DCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:[", self.base)?;
        for (i, a) in self.mults.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}
