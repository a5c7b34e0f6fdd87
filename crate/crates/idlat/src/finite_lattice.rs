//! Finite lattices as explicit tables, plus order-isomorphism checking.
//!
//! A [`FiniteLattice`] is built from labels and a ≤ relation; construction
//! takes the reflexive-transitive closure, rejects non-posets, derives the
//! meet/join tables, and rejects posets where some pair lacks a greatest
//! lower or least upper bound. Everything downstream (law checks, the
//! power-set ↔ ideal-lattice isomorphism) is a table walk with witnesses.

use crate::arith;
use crate::error::{Error, Result};
use crate::zn;

/// Hard cap on lattice size: the meet/join tables are dense.
pub const MAX_ELEMENTS: usize = 2048;

/// Law checks are exhaustive over triples, so they get a tighter cap.
pub const MAX_LAW_CHECK_ELEMENTS: usize = 512;

/// A finite lattice: labels, the full ≤ relation, and meet/join tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    words: usize,
    up: Vec<u64>,   // row i: bitset of j with i <= j
    down: Vec<u64>, // row i: bitset of j with j <= i
    meet: Vec<u32>,
    join: Vec<u32>,
}

fn bit(rows: &[u64], words: usize, i: usize, j: usize) -> bool {
    rows[i * words + j / 64] >> (j % 64) & 1 == 1
}

fn set_bit(rows: &mut [u64], words: usize, i: usize, j: usize) {
    rows[i * words + j / 64] |= 1 << (j % 64);
}

fn for_each_bit(row: &[u64], mut f: impl FnMut(usize)) {
    for (w, &word) in row.iter().enumerate() {
        let mut x = word;
        while x != 0 {
            f(w * 64 + x.trailing_zeros() as usize);
            x &= x - 1;
        }
    }
}

impl FiniteLattice {
    /// Build from generating relations `(i, j)` meaning `i <= j`. Reflexivity
    /// and transitivity are supplied here; antisymmetry failures and missing
    /// meets/joins are reported with witnesses. Indices must be `< labels.len()`.
    pub fn from_order(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 || n > MAX_ELEMENTS {
            return Err(Error::RangeExceeded {
                what: format!("lattice size {n} outside [1, {MAX_ELEMENTS}]"),
            });
        }
        let words = n.div_ceil(64);
        let mut up = vec![0u64; n * words];
        for i in 0..n {
            set_bit(&mut up, words, i, i);
        }
        for &(i, j) in relations {
            assert!(i < n && j < n, "relation ({i}, {j}) out of range for {n} elements");
            set_bit(&mut up, words, i, j);
        }
        // reflexive-transitive closure (Warshall, bitset rows)
        for k in 0..n {
            let rk: Vec<u64> = up[k * words..(k + 1) * words].to_vec();
            for i in 0..n {
                if bit(&up, words, i, k) {
                    for w in 0..words {
                        up[i * words + w] |= rk[w];
                    }
                }
            }
        }
        // antisymmetry
        for i in 0..n {
            for j in i + 1..n {
                if bit(&up, words, i, j) && bit(&up, words, j, i) {
                    return Err(Error::NotAPartialOrder { witness: (i, j) });
                }
            }
        }
        let mut down = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if bit(&up, words, i, j) {
                    set_bit(&mut down, words, j, i);
                }
            }
        }
        let mut lat = FiniteLattice {
            labels,
            words,
            up,
            down,
            meet: vec![0; n * n],
            join: vec![0; n * n],
        };
        lat.derive_tables()?;
        Ok(lat)
    }

    fn derive_tables(&mut self) -> Result<()> {
        let (n, words) = (self.size(), self.words);
        let mut scratch = vec![0u64; words];
        for i in 0..n {
            for j in 0..=i {
                // greatest lower bound over down(i) ∩ down(j)
                for w in 0..words {
                    scratch[w] = self.down[i * words + w] & self.down[j * words + w];
                }
                let m = self.extremum(&scratch, true).ok_or(Error::NotALattice {
                    pair: (j, i),
                    missing: "greatest lower bound",
                })?;
                self.meet[i * n + j] = m as u32;
                self.meet[j * n + i] = m as u32;
                // least upper bound over up(i) ∩ up(j)
                for w in 0..words {
                    scratch[w] = self.up[i * words + w] & self.up[j * words + w];
                }
                let m = self.extremum(&scratch, false).ok_or(Error::NotALattice {
                    pair: (j, i),
                    missing: "least upper bound",
                })?;
                self.join[i * n + j] = m as u32;
                self.join[j * n + i] = m as u32;
            }
        }
        Ok(())
    }

    /// Greatest (or least) element of the bitset `set`, if it has one.
    fn extremum(&self, set: &[u64], greatest: bool) -> Option<usize> {
        let words = self.words;
        let mut m: Option<usize> = None;
        for_each_bit(set, |k| {
            m = match m {
                None => Some(k),
                Some(cur) => {
                    let replace = if greatest {
                        bit(&self.up, words, cur, k) // cur <= k
                    } else {
                        bit(&self.up, words, k, cur) // k <= cur
                    };
                    Some(if replace { k } else { cur })
                }
            };
        });
        let m = m?;
        // candidate must actually bound the whole set
        let rows = if greatest { &self.down } else { &self.up };
        for w in 0..words {
            if set[w] & !rows[m * words + w] != 0 {
                return None;
            }
        }
        Some(m)
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        bit(&self.up, self.words, i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.size() + j] as usize
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.size() + j] as usize
    }

    /// The least element (a finite lattice always has one).
    pub fn bottom(&self) -> usize {
        (0..self.size()).fold(0, |b, i| self.meet(b, i))
    }

    /// The greatest element.
    pub fn top(&self) -> usize {
        (0..self.size()).fold(0, |t, i| self.join(t, i))
    }

    /// Covering pairs (i, j): i < j with nothing strictly between. These are
    /// the edges of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let strictly_between = (0..n)
                    .any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !strictly_between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Exhaustive check of the modular law
    /// x ≤ z ⟹ x ∨ (y ∧ z) = (x ∨ y) ∧ z, with a witness triple on failure.
    pub fn is_modular(&self) -> Result<LawVerdict> {
        self.check_law_size()?;
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.leq(x, z) && self.join(x, self.meet(y, z)) != self.meet(self.join(x, y), z) {
                        return Ok(LawVerdict { holds: false, witness: Some([x, y, z]) });
                    }
                }
            }
        }
        Ok(LawVerdict { holds: true, witness: None })
    }

    /// Exhaustive check of the distributive law
    /// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z), with a witness triple on failure.
    pub fn is_distributive(&self) -> Result<LawVerdict> {
        self.check_law_size()?;
        let n = self.size();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z)) {
                        return Ok(LawVerdict { holds: false, witness: Some([x, y, z]) });
                    }
                }
            }
        }
        Ok(LawVerdict { holds: true, witness: None })
    }

    fn check_law_size(&self) -> Result<()> {
        if self.size() > MAX_LAW_CHECK_ELEMENTS {
            return Err(Error::RangeExceeded {
                what: format!(
                    "law check over {} elements refused (bound {MAX_LAW_CHECK_ELEMENTS})",
                    self.size()
                ),
            });
        }
        Ok(())
    }
}

/// Verdict of an exhaustive lattice-law check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawVerdict {
    pub holds: bool,
    /// A triple `[x, y, z]` violating the law, when one exists.
    pub witness: Option<[usize; 3]>,
}

/// The lattice of all subsets of `members` ordered by inclusion. Element `i`
/// is the subset whose bits pick members; labels render as `{a,c}`. Capped so
/// the dense tables stay reasonable: at most 11 members (2048 subsets).
pub fn power_set_lattice<S: AsRef<str>>(members: &[S]) -> Result<FiniteLattice> {
    let l = members.len();
    if l > 11 {
        return Err(Error::RangeExceeded {
            what: format!("power set of {l} members exceeds {MAX_ELEMENTS} elements"),
        });
    }
    let n = 1usize << l;
    let labels: Vec<String> = (0..n).map(|mask| subset_label(members, mask)).collect();
    let mut relations = Vec::new();
    // covering relations suffice; closure fills in the rest
    for mask in 0..n {
        for b in 0..l {
            if mask & (1 << b) == 0 {
                relations.push((mask, mask | (1 << b)));
            }
        }
    }
    FiniteLattice::from_order(labels, &relations)
}

fn subset_label<S: AsRef<str>>(members: &[S], mask: usize) -> String {
    let parts: Vec<&str> = members
        .iter()
        .enumerate()
        .filter_map(|(b, m)| (mask >> b & 1 == 1).then_some(m.as_ref()))
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// A function between two finite lattices, `map[i]` being the image of
/// source element `i`.
#[derive(Debug, Clone)]
pub struct LatticeMap {
    pub source: FiniteLattice,
    pub target: FiniteLattice,
    pub map: Vec<usize>,
}

/// Why a map failed to be an order isomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoFailure {
    SizeMismatch { source: usize, target: usize },
    NotInjective { left: usize, right: usize },
    /// x ≤ y in exactly one of (source pair, image pair).
    OrderNotPreserved { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoVerdict {
    pub holds: bool,
    pub failure: Option<IsoFailure>,
}

/// Check that a map is an order isomorphism. Since meets and joins are
/// determined by the order, this is the whole lattice-isomorphism story.
pub fn verify_isomorphism(m: &LatticeMap) -> IsoVerdict {
    let (s, t) = (&m.source, &m.target);
    if s.size() != t.size() || m.map.len() != s.size() {
        return IsoVerdict {
            holds: false,
            failure: Some(IsoFailure::SizeMismatch { source: s.size(), target: t.size() }),
        };
    }
    let mut seen = vec![usize::MAX; t.size()];
    for (x, &fx) in m.map.iter().enumerate() {
        if seen[fx] != usize::MAX {
            return IsoVerdict {
                holds: false,
                failure: Some(IsoFailure::NotInjective { left: seen[fx], right: x }),
            };
        }
        seen[fx] = x;
    }
    for x in 0..s.size() {
        for y in 0..s.size() {
            if s.leq(x, y) != t.leq(m.map[x], m.map[y]) {
                return IsoVerdict {
                    holds: false,
                    failure: Some(IsoFailure::OrderNotPreserved { left: x, right: y }),
                };
            }
        }
    }
    IsoVerdict { holds: true, failure: None }
}

/// The canonical isomorphism between the power set of a list of distinct
/// primes and the ideal lattice of Z/nZ, n = p₁⋯p_l: a subset S goes to the
/// ideal generated by the product of the primes *not* in S. The empty set
/// lands on the zero ideal and the full set on the whole ring.
pub fn zn_powerset_iso(primes: &[i64]) -> Result<LatticeMap> {
    if primes.is_empty() || primes.len() > 10 {
        return Err(Error::RangeExceeded {
            what: format!("need between 1 and 10 primes, got {}", primes.len()),
        });
    }
    for (i, &p) in primes.iter().enumerate() {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime { value: p });
        }
        if primes[..i].contains(&p) {
            return Err(Error::NotDistinctPrimes { value: p });
        }
    }
    let mut n: i64 = 1;
    for &p in primes {
        n = n.checked_mul(p).ok_or_else(|| Error::RangeExceeded {
            what: "product of primes overflows i64".to_string(),
        })?;
    }
    let member_labels: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    let source = power_set_lattice(&member_labels)?;

    let ideals = zn::ideals(n)?;
    let labels: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
    let mut relations = Vec::new();
    for (i, a) in ideals.iter().enumerate() {
        for (j, b) in ideals.iter().enumerate() {
            if a.is_subset_of(b)? {
                relations.push((i, j));
            }
        }
    }
    let target = FiniteLattice::from_order(labels, &relations)?;

    let l = primes.len();
    let mut map = Vec::with_capacity(1 << l);
    for mask in 0usize..1 << l {
        let mut g: i64 = 1;
        for (b, &p) in primes.iter().enumerate() {
            if mask >> b & 1 == 0 {
                g *= p; // divides n, cannot overflow
            }
        }
        let idx = ideals
            .iter()
            .position(|i| i.generator() == g)
            .expect("every divisor of n generates an ideal in the list");
        map.push(idx);
    }
    Ok(LatticeMap { source, target, map })
}
