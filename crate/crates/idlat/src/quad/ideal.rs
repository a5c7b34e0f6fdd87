//! Nonzero ideals of a quadratic ring of integers, in Hermite normal form.
//!
//! Every nonzero ideal I of O_K = Z[ω] is a rank-2 Z-submodule and has a
//! unique basis of the shape I = Z·a + Z·(b + cω) with a > 0, c > 0, c | a,
//! c | b and 0 <= b < a. That triple is the canonical form stored here, so
//! ideal equality is plain field equality and the ideal norm is a·c. The
//! zero ideal has no such form and is rejected ([`Error::ZeroIdeal`]).
//!
//! All the ideal operations funnel through one Hermite-reduction routine on
//! integer row vectors (x, y) standing for x + yω, computed in checked i128.

use super::{add, mul, to_i64, QuadInt, QuadRing};
use crate::error::{Error, Result};
use std::fmt;

type Vec2 = (i128, i128);

/// A nonzero ideal Z·a + Z·(b + cω) of a quadratic ring, in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadIdeal {
    ring: QuadRing,
    a: i64,
    b: i64,
    c: i64,
}

impl QuadIdeal {
    /// The ideal generated by an arbitrary finite set of elements. Generators
    /// must share one ring (which must also be `ring`); at least one of them
    /// must be nonzero.
    pub fn from_generators(ring: QuadRing, gens: &[QuadInt]) -> Result<Self> {
        let mut rows: Vec<Vec2> = Vec::with_capacity(gens.len() * 2);
        for g in gens {
            ring.check_same(&g.ring())?;
            if g.is_zero() {
                continue;
            }
            let v = (g.x() as i128, g.y() as i128);
            rows.push(v);
            rows.push(ring.omega_mul_vec(v.0, v.1)?);
        }
        Self::from_module_rows(ring, rows)
    }

    /// The principal ideal (g).
    pub fn principal(g: &QuadInt) -> Result<Self> {
        Self::from_generators(g.ring(), std::slice::from_ref(g))
    }

    /// The unit ideal (1) = O_K.
    pub fn whole_ring(ring: QuadRing) -> Self {
        QuadIdeal { ring, a: 1, b: 0, c: 1 }
    }

    /// Hermite-reduce a list of module rows that is already closed enough to
    /// span an ideal (callers guarantee ω-closure; this routine only checks it
    /// in debug builds).
    fn from_module_rows(ring: QuadRing, rows: Vec<Vec2>) -> Result<Self> {
        let mut rows: Vec<Vec2> = rows.into_iter().filter(|&(x, y)| (x, y) != (0, 0)).collect();
        if rows.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        // Euclid on the ω-column until a single row carries it.
        loop {
            let piv = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.1 != 0)
                .min_by_key(|(_, r)| r.1.abs())
                .map(|(i, _)| i);
            let Some(pi) = piv else {
                // every row lies in Z: not a full-rank module, so not a nonzero ideal
                return Err(Error::ZeroIdeal);
            };
            let (pb, pc) = rows[pi];
            let mut reduced_all = true;
            for (i, r) in rows.iter_mut().enumerate() {
                if i == pi || r.1 == 0 {
                    continue;
                }
                let q = r.1.div_euclid(pc);
                *r = (add(r.0, -mul(q, pb)?)?, r.1 - q * pc);
                if r.1 != 0 {
                    reduced_all = false;
                }
            }
            if reduced_all {
                break;
            }
        }
        let pi = rows.iter().position(|r| r.1 != 0).expect("pivot survives reduction");
        let (mut pb, mut pc) = rows[pi];
        if pc < 0 {
            pb = -pb;
            pc = -pc;
        }
        let mut a: i128 = 0;
        for &(x, y) in &rows {
            if y == 0 {
                a = gcd_i128(a, x);
            }
        }
        if a == 0 {
            // rank 1 (a single ω-line): again not a nonzero ideal
            return Err(Error::ZeroIdeal);
        }
        let b = pb.rem_euclid(a);
        let (a, b, c) = (to_i64(a)?, to_i64(b)?, to_i64(pc)?);
        // norm a·c must be representable
        let _ = mul(a as i128, c as i128).and_then(to_i64)?;
        let ideal = QuadIdeal { ring, a, b, c };
        debug_assert!(ideal.invariants_hold(), "HNF invariants violated for {ideal}");
        Ok(ideal)
    }

    /// Canonical-form invariants, including closure under multiplication by ω.
    /// Public so tests can state them; always true for constructed ideals.
    pub fn invariants_hold(&self) -> bool {
        let (a, b, c) = (self.a, self.b, self.c);
        if !(a > 0 && c > 0 && (0..a).contains(&b) && a % c == 0 && b % c == 0) {
            return false;
        }
        // ω·a and ω·(b + cω) must lie back in the module
        let Ok(wa) = self.ring.omega_mul_vec(a as i128, 0) else { return false };
        let Ok(wb) = self.ring.omega_mul_vec(b as i128, c as i128) else { return false };
        self.contains_vec(wa) && self.contains_vec(wb)
    }

    pub fn ring(&self) -> QuadRing {
        self.ring
    }

    /// The canonical basis matrix rows: [a, 0] and [b, c] over (1, ω).
    pub fn hnf(&self) -> [[i64; 2]; 2] {
        [[self.a, 0], [self.b, self.c]]
    }

    /// The canonical Z-basis (a, b + cω) as ring elements.
    pub fn basis(&self) -> (QuadInt, QuadInt) {
        (self.ring.int(self.a, 0), self.ring.int(self.b, self.c))
    }

    /// The ideal norm [O_K : I] = a·c.
    pub fn norm(&self) -> i64 {
        self.a * self.c // representability checked at construction
    }

    pub fn is_whole_ring(&self) -> bool {
        self.a == 1 && self.c == 1
    }

    fn contains_vec(&self, (x, y): Vec2) -> bool {
        let (a, b, c) = (self.a as i128, self.b as i128, self.c as i128);
        if y.rem_euclid(c) != 0 {
            return false;
        }
        let k = y.div_euclid(c);
        (x - k * b).rem_euclid(a) == 0
    }

    /// Membership u ∈ I.
    pub fn contains(&self, u: &QuadInt) -> Result<bool> {
        self.ring.check_same(&u.ring())?;
        Ok(self.contains_vec((u.x() as i128, u.y() as i128)))
    }

    /// Containment other ⊆ self, checked on other's basis.
    pub fn contains_ideal(&self, other: &QuadIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.contains_vec((other.a as i128, 0))
            && self.contains_vec((other.b as i128, other.c as i128)))
    }

    /// I·J: the ideal generated by all pairwise products of basis elements.
    pub fn mul(&self, other: &QuadIdeal) -> Result<QuadIdeal> {
        self.ring.check_same(&other.ring)?;
        let ours = [(self.a as i128, 0), (self.b as i128, self.c as i128)];
        let theirs = [(other.a as i128, 0), (other.b as i128, other.c as i128)];
        let mut rows = Vec::with_capacity(8);
        for u in ours {
            for v in theirs {
                let p = self.ring.mul_vec(u, v)?;
                rows.push(p);
                rows.push(self.ring.omega_mul_vec(p.0, p.1)?);
            }
        }
        Self::from_module_rows(self.ring, rows)
    }

    /// I + J: generated by both bases together.
    pub fn sum(&self, other: &QuadIdeal) -> Result<QuadIdeal> {
        self.ring.check_same(&other.ring)?;
        let rows = vec![
            (self.a as i128, 0),
            (self.b as i128, self.c as i128),
            (other.a as i128, 0),
            (other.b as i128, other.c as i128),
        ];
        Self::from_module_rows(self.ring, rows)
    }

    /// I ∩ J, computed exactly as the kernel of the stacked basis matrix:
    /// solve m₁u₁ + m₂u₂ = k₁v₁ + k₂v₂ over Z by column reduction with a
    /// transformation tag on each row.
    pub fn intersect(&self, other: &QuadIdeal) -> Result<QuadIdeal> {
        self.ring.check_same(&other.ring)?;
        let u = [(self.a as i128, 0i128), (self.b as i128, self.c as i128)];
        let v = [(other.a as i128, 0i128), (other.b as i128, other.c as i128)];
        // rows of [u; -v], each carrying its coefficient row of the 4×4 identity
        let mut rows: Vec<(Vec2, [i128; 4])> = vec![
            (u[0], [1, 0, 0, 0]),
            (u[1], [0, 1, 0, 0]),
            ((-v[0].0, -v[0].1), [0, 0, 1, 0]),
            ((-v[1].0, -v[1].1), [0, 0, 0, 1]),
        ];
        // Phase 1: Euclid on the ω-column until one row carries it.
        // Phase 2: same on the integer column among the rows with ω-part 0.
        // Rows reduced to (0, 0) then have tags spanning the kernel.
        for phase in 0..2 {
            let eligible = |vec: &Vec2| if phase == 0 { vec.1 != 0 } else { vec.1 == 0 && vec.0 != 0 };
            let coord = |vec: &Vec2| if phase == 0 { vec.1 } else { vec.0 };
            loop {
                let Some(pi) = rows
                    .iter()
                    .enumerate()
                    .filter(|(_, (vec, _))| eligible(vec))
                    .min_by_key(|(_, (vec, _))| coord(vec).abs())
                    .map(|(i, _)| i)
                else {
                    break;
                };
                let (pivot_vec, pivot_tag) = rows[pi];
                let mut changed = false;
                for (i, (vec, tag)) in rows.iter_mut().enumerate() {
                    if i == pi || !eligible(vec) {
                        continue;
                    }
                    let q = coord(vec).div_euclid(coord(&pivot_vec));
                    vec.0 = add(vec.0, -mul(q, pivot_vec.0)?)?;
                    vec.1 = add(vec.1, -mul(q, pivot_vec.1)?)?;
                    for t in 0..4 {
                        tag[t] = add(tag[t], -mul(q, pivot_tag[t])?)?;
                    }
                    if eligible(vec) {
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
        }
        // rows that became (0,0) span the kernel; expect exactly two
        let kernel: Vec<[i128; 4]> = rows
            .iter()
            .filter(|(vec, _)| *vec == (0, 0))
            .map(|(_, tag)| *tag)
            .collect();
        debug_assert_eq!(kernel.len(), 2, "full-rank lattices must meet in rank 2");
        let mut out_rows = Vec::with_capacity(kernel.len());
        for t in &kernel {
            let w = (
                add(mul(t[0], u[0].0)?, mul(t[1], u[1].0)?)?,
                add(mul(t[0], u[0].1)?, mul(t[1], u[1].1)?)?,
            );
            debug_assert_eq!(
                w,
                (
                    t[2] * v[0].0 + t[3] * v[1].0,
                    t[2] * v[0].1 + t[3] * v[1].1
                ),
                "kernel row must describe a common element"
            );
            out_rows.push(w);
        }
        Self::from_module_rows(self.ring, out_rows)
    }

    /// The conjugate ideal Ī.
    pub fn conjugate(&self) -> Result<QuadIdeal> {
        let (b1, b2) = self.basis();
        let rows = vec![
            {
                let c = b1.conjugate()?;
                (c.x() as i128, c.y() as i128)
            },
            {
                let c = b2.conjugate()?;
                (c.x() as i128, c.y() as i128)
            },
        ];
        // conjugation is a ring automorphism, so the image of an ideal's basis
        // spans the image ideal; re-close under ω for the reduction's sake
        let mut all = Vec::with_capacity(4);
        for r in rows {
            all.push(r);
            all.push(self.ring.omega_mul_vec(r.0, r.1)?);
        }
        Self::from_module_rows(self.ring, all)
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},0],[{},{}]]", self.a, self.b, self.c)
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
