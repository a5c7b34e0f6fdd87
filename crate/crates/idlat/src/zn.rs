//! Ideals of Z/nZ and their lattice.
//!
//! Every ideal of Z/nZ is principal, generated by the class of a divisor d of
//! n, and the whole ideal lattice is the divisor lattice of n upside down:
//! containment is reverse divisibility of generators, sum is gcd, intersection
//! is lcm, and the product of the ideals generated by d₁ and d₂ is generated
//! by gcd(d₁d₂, n). [`ZnIdeal`] works at that generator level; the companion
//! [`IdealElementSet`] works with literal residue sets and exists so the two
//! views can be checked against each other.

use crate::arith;
use crate::error::{Error, Result};
use std::fmt;

/// Largest modulus for which residue sets are materialized.
pub const DEFAULT_MATERIALIZE_BOUND: i64 = 1_000_000;

/// Guard on `|I| * |J|` for element-level set operations.
const SET_OP_PAIR_BOUND: u64 = 100_000_000;

/// The ideal of Z/nZ generated by the class of one integer, stored in the
/// canonical form d | n with 1 <= d <= n. `d = n` is the zero ideal, `d = 1`
/// the whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZnIdeal {
    n: i64,
    d: i64,
}

impl ZnIdeal {
    /// The ideal of Z/nZ generated by the class of `x`. Any `x` is accepted;
    /// the canonical generator gcd(x, n) is stored (x ≡ 0 gives the zero
    /// ideal). Needs `2 <= n <= 10^12`.
    pub fn new(n: i64, x: i64) -> Result<Self> {
        if !(2..=arith::DEFAULT_FACTOR_BOUND).contains(&n) {
            return Err(Error::RangeExceeded {
                what: format!("ZnIdeal: modulus {n} outside [2, {}]", arith::DEFAULT_FACTOR_BOUND),
            });
        }
        let r = x.rem_euclid(n);
        let d = if r == 0 { n } else { arith::gcd(r, n) };
        Ok(ZnIdeal { n, d })
    }

    pub fn modulus(&self) -> i64 {
        self.n
    }

    /// The canonical generator: the unique divisor d of n with this ideal = dZ/nZ.
    pub fn generator(&self) -> i64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d == self.n
    }

    pub fn is_whole_ring(&self) -> bool {
        self.d == 1
    }

    fn check_same_ring(&self, other: &ZnIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// I + J, the smallest ideal containing both.
    pub fn sum(&self, other: &ZnIdeal) -> Result<ZnIdeal> {
        self.check_same_ring(other)?;
        Ok(ZnIdeal { n: self.n, d: arith::gcd(self.d, other.d) })
    }

    /// I·J, the ideal of all finite sums of products.
    pub fn product(&self, other: &ZnIdeal) -> Result<ZnIdeal> {
        self.check_same_ring(other)?;
        let prod = self.d as i128 * other.d as i128;
        let d = gcd_i128(prod, self.n as i128) as i64;
        Ok(ZnIdeal { n: self.n, d })
    }

    /// I ∩ J.
    pub fn intersect(&self, other: &ZnIdeal) -> Result<ZnIdeal> {
        self.check_same_ring(other)?;
        // lcm of two divisors of n divides n, so no overflow is possible.
        let l = arith::lcm(self.d, other.d).expect("lcm of divisors of n fits i64");
        Ok(ZnIdeal { n: self.n, d: l })
    }

    /// Containment I ⊆ J, which at generator level is d_J | d_I.
    pub fn is_subset_of(&self, other: &ZnIdeal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.d % other.d == 0)
    }

    /// I² = I. For dZ/nZ this is gcd(d², n) = d; the element-set view agrees
    /// (see the cross-check tests).
    pub fn is_idempotent(&self) -> bool {
        let sq = self.d as i128 * self.d as i128;
        gcd_i128(sq, self.n as i128) as i64 == self.d
    }

    /// The literal residues of this ideal, sorted. Refused for moduli above
    /// [`DEFAULT_MATERIALIZE_BOUND`].
    pub fn elements(&self) -> Result<IdealElementSet> {
        if self.n > DEFAULT_MATERIALIZE_BOUND {
            return Err(Error::RangeExceeded {
                what: format!(
                    "cannot materialize residues for n = {} (bound {DEFAULT_MATERIALIZE_BOUND})",
                    self.n
                ),
            });
        }
        let residues = (0..self.n / self.d).map(|k| k * self.d).collect();
        Ok(IdealElementSet { n: self.n, residues })
    }
}

impl fmt::Display for ZnIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "(0)")
        } else if self.is_whole_ring() {
            write!(f, "Z/{}Z", self.n)
        } else {
            write!(f, "{}Z/{}Z", self.d, self.n)
        }
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All ideals of Z/nZ, sorted by generator ascending (whole ring first, zero
/// ideal last). There are exactly as many as n has divisors.
pub fn ideals(n: i64) -> Result<Vec<ZnIdeal>> {
    let f = factorization_for_modulus(n)?;
    Ok(f.divisors().into_iter().map(|d| ZnIdeal { n, d }).collect())
}

/// True iff every ideal of Z/nZ is idempotent. Checked ideal-by-ideal; the
/// classification (true exactly for squarefree n) is a theorem the test suite
/// verifies against this, not something this function assumes.
pub fn all_ideals_idempotent(n: i64) -> Result<bool> {
    Ok(ideals(n)?.iter().all(|i| i.is_idempotent()))
}

/// True iff Z/nZ is a Boolean ring (x² = x for every residue). Checked by
/// literal scan, so n is capped at [`DEFAULT_MATERIALIZE_BOUND`].
pub fn is_boolean_ring(n: i64) -> Result<bool> {
    if !(2..=DEFAULT_MATERIALIZE_BOUND).contains(&n) {
        return Err(Error::RangeExceeded {
            what: format!("is_boolean_ring: n = {n} outside [2, {DEFAULT_MATERIALIZE_BOUND}]"),
        });
    }
    Ok((0..n).all(|x| (x as i128 * x as i128).rem_euclid(n as i128) as i64 == x))
}

/// True iff Z/nZ is a field, i.e. n is prime.
pub fn is_field(n: i64) -> Result<bool> {
    if !(2..=arith::DEFAULT_FACTOR_BOUND).contains(&n) {
        return Err(Error::RangeExceeded {
            what: format!("is_field: n = {n} outside [2, {}]", arith::DEFAULT_FACTOR_BOUND),
        });
    }
    Ok(arith::is_prime(n))
}

/// For an explicit ascending chain I₀ ⊆ I₁ ⊆ …, the index from which it is
/// constant. Mixed moduli and non-ascending input are errors; an empty or
/// constant chain is stationary at 0.
pub fn chain_is_stationary(chain: &[ZnIdeal]) -> Result<usize> {
    let mut last_change = 0usize;
    for i in 1..chain.len() {
        chain[i - 1].check_same_ring(&chain[i])?;
        if !chain[i - 1].is_subset_of(&chain[i])? {
            return Err(Error::NotAChain { index: i - 1 });
        }
        if chain[i - 1] != chain[i] {
            last_change = i;
        }
    }
    Ok(last_change)
}

fn factorization_for_modulus(n: i64) -> Result<arith::Factorization> {
    if n < 2 {
        return Err(Error::RangeExceeded {
            what: format!("modulus {n} below 2"),
        });
    }
    arith::factorize(n)
}

/// A subset of Z/nZ given by its literal sorted residue list. The point of
/// this representation is to define the ideal operations straight from their
/// element-level definitions, with no divisor arithmetic anywhere, so it can
/// serve as an independent cross-check for [`ZnIdeal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealElementSet {
    n: i64,
    residues: Vec<i64>,
}

impl IdealElementSet {
    pub fn modulus(&self) -> i64 {
        self.n
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn contains(&self, x: i64) -> bool {
        self.residues.binary_search(&x.rem_euclid(self.n)).is_ok()
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    fn check_pair_budget(&self, other: &Self) -> Result<()> {
        let pairs = self.residues.len() as u64 * other.residues.len() as u64;
        if pairs > SET_OP_PAIR_BOUND {
            return Err(Error::RangeExceeded {
                what: format!("element-level operation over {pairs} pairs refused"),
            });
        }
        Ok(())
    }

    /// {x + y : x ∈ I, y ∈ J}, which for ideals is already closed.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        self.check_pair_budget(other)?;
        let mut seen = vec![false; self.n as usize];
        for &x in &self.residues {
            for &y in &other.residues {
                seen[((x + y) % self.n) as usize] = true;
            }
        }
        Ok(Self::from_seen(self.n, &seen))
    }

    /// All finite sums Σ xᵢyᵢ with xᵢ ∈ I, yᵢ ∈ J: the pairwise products,
    /// closed under addition. This is the textbook definition of the ideal
    /// product, computed literally.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        self.check_pair_budget(other)?;
        let n = self.n;
        let mut seen = vec![false; n as usize];
        let mut gens = Vec::new();
        seen[0] = true; // the empty sum
        for &x in &self.residues {
            for &y in &other.residues {
                let p = ((x as i128 * y as i128).rem_euclid(n as i128)) as usize;
                if !seen[p] {
                    seen[p] = true;
                    gens.push(p as i64);
                }
            }
        }
        // close under addition of the product generators
        let mut queue: Vec<i64> = seen
            .iter()
            .enumerate()
            .filter_map(|(v, &s)| s.then_some(v as i64))
            .collect();
        while let Some(q) = queue.pop() {
            for &g in &gens {
                let s = (q + g) % n;
                if !seen[s as usize] {
                    seen[s as usize] = true;
                    queue.push(s);
                }
            }
        }
        Ok(Self::from_seen(n, &seen))
    }

    /// I ∩ J as plain set intersection.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let residues = self
            .residues
            .iter()
            .copied()
            .filter(|x| other.residues.binary_search(x).is_ok())
            .collect();
        Ok(IdealElementSet { n: self.n, residues })
    }

    fn from_seen(n: i64, seen: &[bool]) -> Self {
        let residues = seen
            .iter()
            .enumerate()
            .filter_map(|(v, &s)| s.then_some(v as i64))
            .collect();
        IdealElementSet { n, residues }
    }
}
