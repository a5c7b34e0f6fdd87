//! Deciding whether an ideal is principal by norm-form search.
//!
//! A generator of I must have |N(g)| = N(I) =: n, so candidates are the
//! solutions of the norm form with value ±n. For imaginary fields the form is
//! positive definite and the solution set finite: the answer is exact, with
//! [`Principality::NotPrincipal`] meaning a proof. For real fields the unit
//! group is infinite, so the search enumerates y up to a caller-supplied
//! bound and failure to find a generator is only [`Principality::Unknown`].

use super::ideal::QuadIdeal;
use super::{to_i64, OmegaKind, QuadInt};
use crate::error::{Error, Result};

/// Default y-range for the real-field search.
pub const DEFAULT_SEARCH_BOUND: i64 = 10_000;

/// Hard ceiling on any enumeration range here.
const MAX_SEARCH_BOUND: i64 = 10_000_000;

/// Outcome of a principality test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Principality {
    /// A generator, with the ideal equality (g) = I verified.
    Principal(QuadInt),
    /// Proof of impossibility (imaginary fields only): the finite solution
    /// set of the norm form contains no generator.
    NotPrincipal,
    /// The bounded search found nothing (real fields).
    Unknown,
}

/// Decide whether `ideal` is principal.
///
/// `search_bound` limits the y-coordinate sweep in the real case; it also
/// guards the (finite) imaginary enumeration, which errors out rather than
/// degrade to a partial answer if the range would exceed the hard ceiling.
pub fn is_principal(ideal: &QuadIdeal, search_bound: i64) -> Result<Principality> {
    if !(1..=MAX_SEARCH_BOUND).contains(&search_bound) {
        return Err(Error::RangeExceeded {
            what: format!("principality search bound {search_bound} outside [1, {MAX_SEARCH_BOUND}]"),
        });
    }
    let ring = ideal.ring();
    let d = ring.d() as i128;
    let n = ideal.norm() as i128;
    if ring.is_imaginary() {
        // positive definite: |d| y² ≤ n (ω = √d) or |d| y² ≤ 4n (half-integer ω)
        let scale: i128 = match ring.omega_kind() {
            OmegaKind::SqrtD => 1,
            OmegaKind::HalfOnePlusSqrtD => 4,
        };
        let y_max = ((scale * n / -d) as u128).isqrt() as i128;
        if y_max > MAX_SEARCH_BOUND as i128 {
            return Err(Error::RangeExceeded {
                what: format!("exact principality scan needs {y_max} candidates"),
            });
        }
        for y in 0..=y_max {
            if let Some(p) = try_candidates(ideal, y, n)? {
                return Ok(Principality::Principal(p));
            }
        }
        Ok(Principality::NotPrincipal)
    } else {
        for y in 0..=search_bound as i128 {
            for target in [n, -n] {
                if let Some(p) = try_candidates(ideal, y, target)? {
                    return Ok(Principality::Principal(p));
                }
            }
        }
        Ok(Principality::Unknown)
    }
}

/// Check every element with this y-coordinate and norm `target` for being a
/// generator of `ideal`.
fn try_candidates(ideal: &QuadIdeal, y: i128, target: i128) -> Result<Option<QuadInt>> {
    let ring = ideal.ring();
    let d = ring.d() as i128;
    let xs: Vec<i128> = match ring.omega_kind() {
        OmegaKind::SqrtD => {
            // x² = target + d·y²
            match checked_square_root(target + d * y * y) {
                Some(x) => {
                    if x == 0 {
                        vec![0]
                    } else {
                        vec![x, -x]
                    }
                }
                None => vec![],
            }
        }
        OmegaKind::HalfOnePlusSqrtD => {
            // (2x + y)² = 4·target + d·y²
            match checked_square_root(4 * target + d * y * y) {
                Some(s) => {
                    let mut out = Vec::new();
                    if (s - y).rem_euclid(2) == 0 {
                        out.push((s - y) / 2);
                        if s != 0 {
                            out.push((-s - y) / 2);
                        }
                    }
                    out
                }
                None => vec![],
            }
        }
    };
    for x in xs {
        let g = ring.int(to_i64(x)?, to_i64(y)?);
        if g.is_zero() {
            continue;
        }
        if QuadIdeal::principal(&g)? == *ideal {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Integer square root when `v` is a non-negative perfect square.
fn checked_square_root(v: i128) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let r = (v as u128).isqrt() as i128;
    (r * r == v).then_some(r)
}
