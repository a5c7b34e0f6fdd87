//! Quadratic fields Q(√d) and their rings of integers.
//!
//! For squarefree d ≠ 0, 1 the ring of integers of Q(√d) is Z[ω] with
//! ω = √d when d ≡ 2, 3 (mod 4) (field discriminant 4d) and ω = (1+√d)/2
//! when d ≡ 1 (mod 4) (discriminant d). Elements are stored as integer pairs
//! x + yω; all arithmetic is checked and exact.
//!
//! Submodules: [`ideal`] for nonzero ideals in Hermite normal form,
//! [`split`] for the factorization of a rational prime, and [`principal`]
//! for deciding whether an ideal is principal by norm-form search.

pub mod ideal;
pub mod principal;
pub mod split;

pub use ideal::QuadIdeal;
pub use principal::{is_principal, Principality, DEFAULT_SEARCH_BOUND};
pub use split::{split_prime, splitting_report, SplitKind, Splitting, SplittingReport};

use crate::arith;
use crate::error::{Error, Result};
use std::fmt;

/// Which generator the ring of integers uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaKind {
    /// ω = √d, for d ≡ 2, 3 (mod 4).
    SqrtD,
    /// ω = (1+√d)/2, for d ≡ 1 (mod 4).
    HalfOnePlusSqrtD,
}

/// The field discriminant of Q(√d): 4d when d ≡ 2, 3 (mod 4), d when
/// d ≡ 1 (mod 4). Validates that d is squarefree and not 0 or 1.
pub fn discriminant(d: i64) -> Result<i64> {
    if d == 0 || d == 1 {
        return Err(Error::InvalidD { value: d });
    }
    if !arith::is_squarefree(d)? {
        return Err(Error::NotSquarefree { value: d });
    }
    if d.rem_euclid(4) == 1 {
        Ok(d)
    } else {
        d.checked_mul(4).ok_or_else(|| Error::RangeExceeded {
            what: format!("discriminant 4·{d} overflows i64"),
        })
    }
}

/// The ring of integers O_K of K = Q(√d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadRing {
    d: i64,
    disc: i64,
    omega: OmegaKind,
}

impl QuadRing {
    /// Requires squarefree d, d ∉ {0, 1}.
    pub fn new(d: i64) -> Result<Self> {
        let disc = discriminant(d)?;
        let omega = if d.rem_euclid(4) == 1 {
            OmegaKind::HalfOnePlusSqrtD
        } else {
            OmegaKind::SqrtD
        };
        Ok(QuadRing { d, disc, omega })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.disc
    }

    pub fn omega_kind(&self) -> OmegaKind {
        self.omega
    }

    pub fn is_imaginary(&self) -> bool {
        self.d < 0
    }

    /// The element x + yω.
    pub fn int(&self, x: i64, y: i64) -> QuadInt {
        QuadInt { ring: *self, x, y }
    }

    /// The element u + v√d, whatever ω is. For ω = (1+√d)/2 this is
    /// (u − v) + 2v·ω, which is always integral.
    pub fn from_sqrt_basis(&self, u: i64, v: i64) -> Result<QuadInt> {
        match self.omega {
            OmegaKind::SqrtD => Ok(self.int(u, v)),
            OmegaKind::HalfOnePlusSqrtD => {
                let x = u.checked_sub(v).ok_or_else(overflow)?;
                let y = v.checked_mul(2).ok_or_else(overflow)?;
                Ok(self.int(x, y))
            }
        }
    }

    /// √d as a ring element.
    pub fn sqrt_d(&self) -> QuadInt {
        match self.omega {
            OmegaKind::SqrtD => self.int(0, 1),
            OmegaKind::HalfOnePlusSqrtD => self.int(-1, 2),
        }
    }

    /// (d−1)/4, the constant term in ω² = ω + (d−1)/4. Only meaningful for
    /// the half-integer case.
    fn omega_sq_const(&self) -> i64 {
        debug_assert_eq!(self.omega, OmegaKind::HalfOnePlusSqrtD);
        (self.d - 1) / 4
    }

    pub(crate) fn check_same(&self, other: &QuadRing) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch { left: self.d, right: other.d });
        }
        Ok(())
    }

    /// ω·(x + yω) as a coordinate map, exact in i128.
    pub(crate) fn omega_mul_vec(&self, x: i128, y: i128) -> Result<(i128, i128)> {
        match self.omega {
            OmegaKind::SqrtD => Ok((mul(self.d as i128, y)?, x)),
            OmegaKind::HalfOnePlusSqrtD => {
                Ok((mul(self.omega_sq_const() as i128, y)?, add(x, y)?))
            }
        }
    }

    /// (x1 + y1ω)(x2 + y2ω) as a coordinate map, exact in i128.
    pub(crate) fn mul_vec(
        &self,
        (x1, y1): (i128, i128),
        (x2, y2): (i128, i128),
    ) -> Result<(i128, i128)> {
        let xx = mul(x1, x2)?;
        let yy = mul(y1, y2)?;
        let cross = add(mul(x1, y2)?, mul(x2, y1)?)?;
        match self.omega {
            OmegaKind::SqrtD => Ok((add(xx, mul(self.d as i128, yy)?)?, cross)),
            OmegaKind::HalfOnePlusSqrtD => Ok((
                add(xx, mul(self.omega_sq_const() as i128, yy)?)?,
                add(cross, yy)?,
            )),
        }
    }
}

impl fmt::Display for QuadRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.omega {
            OmegaKind::SqrtD => write!(f, "Z[√{}]", self.d),
            OmegaKind::HalfOnePlusSqrtD => write!(f, "Z[(1+√{})/2]", self.d),
        }
    }
}

fn overflow() -> Error {
    Error::RangeExceeded { what: "quadratic-integer arithmetic overflows".to_string() }
}

pub(crate) fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(overflow)
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow)
}

pub(crate) fn to_i64(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| overflow())
}

/// An element x + yω of a quadratic ring of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadInt {
    ring: QuadRing,
    x: i64,
    y: i64,
}

impl QuadInt {
    pub fn ring(&self) -> QuadRing {
        self.ring
    }

    pub fn x(&self) -> i64 {
        self.x
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn add(&self, other: &QuadInt) -> Result<QuadInt> {
        self.ring.check_same(&other.ring)?;
        Ok(QuadInt {
            ring: self.ring,
            x: self.x.checked_add(other.x).ok_or_else(overflow)?,
            y: self.y.checked_add(other.y).ok_or_else(overflow)?,
        })
    }

    pub fn sub(&self, other: &QuadInt) -> Result<QuadInt> {
        self.ring.check_same(&other.ring)?;
        Ok(QuadInt {
            ring: self.ring,
            x: self.x.checked_sub(other.x).ok_or_else(overflow)?,
            y: self.y.checked_sub(other.y).ok_or_else(overflow)?,
        })
    }

    pub fn neg(&self) -> Result<QuadInt> {
        Ok(QuadInt {
            ring: self.ring,
            x: self.x.checked_neg().ok_or_else(overflow)?,
            y: self.y.checked_neg().ok_or_else(overflow)?,
        })
    }

    pub fn mul(&self, other: &QuadInt) -> Result<QuadInt> {
        self.ring.check_same(&other.ring)?;
        let (x, y) = self
            .ring
            .mul_vec((self.x as i128, self.y as i128), (other.x as i128, other.y as i128))?;
        Ok(QuadInt { ring: self.ring, x: to_i64(x)?, y: to_i64(y)? })
    }

    /// The Galois conjugate: √d goes to −√d, so ω goes to −ω or 1−ω.
    pub fn conjugate(&self) -> Result<QuadInt> {
        match self.ring.omega {
            OmegaKind::SqrtD => Ok(QuadInt {
                ring: self.ring,
                x: self.x,
                y: self.y.checked_neg().ok_or_else(overflow)?,
            }),
            OmegaKind::HalfOnePlusSqrtD => Ok(QuadInt {
                ring: self.ring,
                x: self.x.checked_add(self.y).ok_or_else(overflow)?,
                y: self.y.checked_neg().ok_or_else(overflow)?,
            }),
        }
    }

    /// N(u) = u·ū: x² − dy² for ω = √d, x² + xy + y²(1−d)/4 for the
    /// half-integer ω. Exact; overflow is an error.
    pub fn norm(&self) -> Result<i64> {
        let (x, y) = (self.x as i128, self.y as i128);
        let n = match self.ring.omega {
            OmegaKind::SqrtD => add(mul(x, x)?, -mul(self.ring.d as i128, mul(y, y)?)?)?,
            OmegaKind::HalfOnePlusSqrtD => {
                let c = (1 - self.ring.d as i128) / 4;
                add(add(mul(x, x)?, mul(x, y)?)?, mul(c, mul(y, y)?)?)?
            }
        };
        to_i64(n)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.x, self.y) {
            (x, 0) => write!(f, "{x}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (0, y) => write!(f, "{y}w"),
            (x, 1) => write!(f, "{x}+w"),
            (x, -1) => write!(f, "{x}-w"),
            (x, y) if y < 0 => write!(f, "{x}-{}w", -(y as i128)),
            (x, y) => write!(f, "{x}+{y}w"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(-5).unwrap(), -20);
        assert_eq!(discriminant(-7).unwrap(), -7);
        assert_eq!(discriminant(2).unwrap(), 8);
        assert_eq!(discriminant(5).unwrap(), 5);
        assert!(matches!(discriminant(12), Err(Error::NotSquarefree { value: 12 })));
        assert!(matches!(discriminant(0), Err(Error::InvalidD { value: 0 })));
        assert!(matches!(discriminant(1), Err(Error::InvalidD { value: 1 })));
    }

    #[test]
    fn omega_kinds() {
        assert_eq!(QuadRing::new(-5).unwrap().omega_kind(), OmegaKind::SqrtD);
        assert_eq!(QuadRing::new(-7).unwrap().omega_kind(), OmegaKind::HalfOnePlusSqrtD);
        assert_eq!(QuadRing::new(2).unwrap().omega_kind(), OmegaKind::SqrtD);
        assert_eq!(QuadRing::new(-1).unwrap().omega_kind(), OmegaKind::SqrtD);
        assert_eq!(QuadRing::new(5).unwrap().omega_kind(), OmegaKind::HalfOnePlusSqrtD);
    }

    #[test]
    fn norms() {
        let r = QuadRing::new(-5).unwrap();
        assert_eq!(r.int(4, 1).norm().unwrap(), 21);
        assert_eq!(r.int(0, 1).norm().unwrap(), 5);
        assert_eq!(r.int(-3, 0).norm().unwrap(), 9);
        let r7 = QuadRing::new(-7).unwrap();
        assert_eq!(r7.int(0, 1).norm().unwrap(), 2);
        assert_eq!(r7.int(1, 1).norm().unwrap(), 4);
        let r5 = QuadRing::new(5).unwrap();
        // the golden ratio has norm -1
        assert_eq!(r5.int(0, 1).norm().unwrap(), -1);
    }

    #[test]
    fn norm_is_multiplicative() {
        for d in [-10, -7, -5, -3, -2, -1, 2, 3, 5, 13] {
            let r = QuadRing::new(d).unwrap();
            for (a, b, c, e) in [(1, 2, 3, -1), (0, 1, 1, 1), (-4, 3, 2, 5), (7, -2, -3, 4)] {
                let u = r.int(a, b);
                let v = r.int(c, e);
                assert_eq!(
                    u.mul(&v).unwrap().norm().unwrap(),
                    u.norm().unwrap() * v.norm().unwrap(),
                    "d={d} u={u} v={v}"
                );
            }
        }
    }

    #[test]
    fn conjugation_properties() {
        for d in [-5, -7, 5, 2, 13] {
            let r = QuadRing::new(d).unwrap();
            let u = r.int(3, -2);
            let c = u.conjugate().unwrap();
            // u·ū = N(u) as a rational integer
            let prod = u.mul(&c).unwrap();
            assert_eq!(prod.y(), 0, "d={d}");
            assert_eq!(prod.x(), u.norm().unwrap());
            // conjugation is an involution
            assert_eq!(c.conjugate().unwrap(), u);
        }
    }

    #[test]
    fn sqrt_basis_round_trip() {
        let r = QuadRing::new(-7).unwrap();
        let s = r.sqrt_d();
        assert_eq!(s, r.int(-1, 2));
        assert_eq!(s.norm().unwrap(), 7);
        assert_eq!(r.from_sqrt_basis(4, 1).unwrap(), r.int(3, 2));
        let r = QuadRing::new(-5).unwrap();
        assert_eq!(r.sqrt_d(), r.int(0, 1));
        assert_eq!(r.from_sqrt_basis(4, 1).unwrap(), r.int(4, 1));
    }

    #[test]
    fn ring_mismatch_detected() {
        let a = QuadRing::new(-5).unwrap().int(1, 0);
        let b = QuadRing::new(-7).unwrap().int(1, 0);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch { left: -5, right: -7 })));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn element_display() {
        let r = QuadRing::new(-5).unwrap();
        assert_eq!(r.int(4, 1).to_string(), "4+w");
        assert_eq!(r.int(4, -1).to_string(), "4-w");
        assert_eq!(r.int(0, -3).to_string(), "-3w");
        assert_eq!(r.int(-2, 0).to_string(), "-2");
        assert_eq!(r.int(0, 1).to_string(), "w");
        assert_eq!(r.int(2, -5).to_string(), "2-5w");
    }

    #[test]
    fn arithmetic_overflow_reported() {
        let r = QuadRing::new(-5).unwrap();
        let big = r.int(i64::MAX, 1);
        assert!(matches!(big.mul(&big), Err(Error::RangeExceeded { .. })));
        assert!(matches!(big.add(&r.int(1, 0)), Err(Error::RangeExceeded { .. })));
        assert!(matches!(r.int(i64::MAX, i64::MAX).norm(), Err(Error::RangeExceeded { .. })));
    }
}
