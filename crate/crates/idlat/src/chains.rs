//! Ascending chains of ideals and stationarity detection.
//!
//! The interesting inhabitants are radical chains in the ring O_C of all
//! algebraic integers: the principal ideals generated by b^(1/2), b^(1/4),
//! b^(1/8), … for an integer base b >= 2. Containment between two such ideals
//! reduces to exact rational-exponent comparison: b^q1·O_C ⊆ b^q2·O_C exactly
//! when b^(q1−q2) is an algebraic integer, i.e. when q2 <= q1 (for positive
//! rationals the monic witness is X^t − b^s; a negative exponent would make
//! 1/b^|s| a rational algebraic integer, impossible for b >= 2).
//!
//! Exponents are `Ratio<i128>`: chains are allowed up to 64 halving steps, and
//! 1/2^64 already needs more than an `i64` denominator.

use crate::error::{Error, Result};
use num_rational::Ratio;

/// Exact rational exponent. Always kept in lowest terms by `Ratio`.
pub type Exponent = Ratio<i128>;

/// Hard ceiling on halving steps; 1/2^64 is well inside `i128`.
pub const MAX_CHAIN_STEPS: u32 = 64;

/// Largest stationarity-detection budget accepted.
pub const MAX_BUDGET: usize = 1_000_000;

/// The principal ideal b^q · O_C of the ring of all algebraic integers,
/// for an integer base b >= 2 and exact rational exponent q > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalChainElement {
    base: i64,
    exponent: Exponent,
}

impl RadicalChainElement {
    pub fn new(base: i64, exponent: Exponent) -> Result<Self> {
        if base < 2 {
            return Err(Error::RangeExceeded {
                what: format!("radical base {base} below 2"),
            });
        }
        if exponent <= Ratio::from_integer(0) {
            return Err(Error::RangeExceeded {
                what: format!("radical exponent {exponent} must be positive"),
            });
        }
        Ok(RadicalChainElement { base, exponent })
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn exponent(&self) -> Exponent {
        self.exponent
    }

    /// Containment self ⊆ other of the generated ideals, i.e. whether
    /// other's generator divides self's in O_C: true exactly when
    /// other.exponent <= self.exponent.
    pub fn ideal_leq(&self, other: &Self) -> Result<bool> {
        if self.base != other.base {
            return Err(Error::BaseMismatch { left: self.base, right: other.base });
        }
        Ok(other.exponent <= self.exponent)
    }
}

impl std::fmt::Display for RadicalChainElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.exponent.is_integer() {
            write!(f, "{}^{}", self.base, self.exponent.numer())
        } else {
            write!(f, "{}^({}/{})", self.base, self.exponent.numer(), self.exponent.denom())
        }
    }
}

/// The k-th element of the radical chain over `base`: b^(1/2^k), `1 <= k <= 64`.
pub fn radical_chain_step(base: i64, k: u32) -> Result<RadicalChainElement> {
    if k == 0 || k > MAX_CHAIN_STEPS {
        return Err(Error::RangeExceeded {
            what: format!("radical chain step {k} outside [1, {MAX_CHAIN_STEPS}]"),
        });
    }
    RadicalChainElement::new(base, Ratio::new(1, 1i128 << k))
}

/// The first `steps` elements of the radical chain over `base`:
/// b^(1/2), b^(1/4), …, b^(1/2^steps). Each strictly contains its predecessor.
pub fn radical_chain(base: i64, steps: u32) -> Result<Vec<RadicalChainElement>> {
    if steps == 0 || steps > MAX_CHAIN_STEPS {
        return Err(Error::RangeExceeded {
            what: format!("radical chain length {steps} outside [1, {MAX_CHAIN_STEPS}]"),
        });
    }
    (1..=steps).map(|k| radical_chain_step(base, k)).collect()
}

/// Outcome of bounded stationarity detection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationaryVerdict {
    /// The chain stopped moving at this index (exact if the chain was finite;
    /// otherwise relative to the examined horizon).
    StationaryAt(usize),
    /// Every examined step up to the budget still moved.
    NotStationaryWithin(usize),
}

/// Walk an ascending chain, examining at most `budget + 1` terms, and decide
/// whether it went stationary.
///
/// `leq(a, b)` must say whether a ⊆ b and `eq` whether they are equal; the
/// walk checks ascension stepwise and reports [`Error::NotAscending`] with the
/// index of the first element that fails to contain its predecessor. If the
/// iterator ends before the horizon the chain is finite and the answer exact;
/// if the horizon is hit while the chain is still moving the verdict is
/// [`StationaryVerdict::NotStationaryWithin`] the budget.
pub fn detect_stationary<T, I, L, E>(chain: I, leq: L, eq: E, budget: usize) -> Result<StationaryVerdict>
where
    I: IntoIterator<Item = T>,
    L: Fn(&T, &T) -> bool,
    E: Fn(&T, &T) -> bool,
{
    if budget == 0 || budget > MAX_BUDGET {
        return Err(Error::RangeExceeded {
            what: format!("detection budget {budget} outside [1, {MAX_BUDGET}]"),
        });
    }
    let mut it = chain.into_iter();
    let Some(mut prev) = it.next() else {
        return Ok(StationaryVerdict::StationaryAt(0));
    };
    let mut last_change = 0usize;
    for i in 1..=budget {
        let Some(cur) = it.next() else {
            return Ok(StationaryVerdict::StationaryAt(last_change));
        };
        if !leq(&prev, &cur) {
            return Err(Error::NotAscending { index: i });
        }
        if !eq(&prev, &cur) {
            last_change = i;
        }
        prev = cur;
    }
    if last_change == budget {
        Ok(StationaryVerdict::NotStationaryWithin(budget))
    } else {
        Ok(StationaryVerdict::StationaryAt(last_change))
    }
}

/// [`detect_stationary`] specialized to explicit radical-chain elements.
/// Validates that all elements share one base before comparing exponents.
pub fn detect_stationary_radical(
    chain: &[RadicalChainElement],
    budget: usize,
) -> Result<StationaryVerdict> {
    for w in chain.windows(2) {
        if w[0].base != w[1].base {
            return Err(Error::BaseMismatch { left: w[0].base, right: w[1].base });
        }
    }
    detect_stationary(
        chain.iter(),
        |a, b| a.ideal_leq(b).expect("bases pre-validated"),
        |a, b| a == b,
        budget,
    )
}
