//! Exact integer number theory over `i64`.
//!
//! Everything here is checked arithmetic: values that would overflow or fall
//! outside the configured bounds come back as [`Error::RangeExceeded`] instead
//! of wrapping. Factorization is plain trial division, which is exact and fast
//! enough for the desk-scale inputs this crate targets.

use crate::error::{Error, Result};

/// Largest `n` that [`factorize`] accepts by default (trial division stays
/// under ~10^6 candidate divisors at this size).
pub const DEFAULT_FACTOR_BOUND: i64 = 1_000_000_000_000;

/// Largest modulus [`sqrt_mod`] will scan. The scan is exhaustive over
/// residues, so this keeps a single call under a few milliseconds.
pub const DEFAULT_SCAN_BOUND: i64 = 1_000_000;

/// Greatest common divisor, always non-negative. `gcd(0, 0) = 0`.
///
/// Panics only on the unrepresentable corner `gcd(i64::MIN, i64::MIN)` (and
/// `gcd(i64::MIN, 0)`), whose value 2^63 does not fit an `i64`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    i64::try_from(a).expect("gcd value 2^63 does not fit i64")
}

/// Least common multiple, non-negative. `lcm(a, 0) = 0`.
pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    // Divide before multiplying so the only overflow left is a genuine one.
    let g = gcd(a, b) as u64;
    match (a.unsigned_abs() / g).checked_mul(b.unsigned_abs()) {
        Some(v) if v <= i64::MAX as u64 => Ok(v as i64),
        _ => Err(Error::RangeExceeded { what: format!("lcm({a}, {b}) overflows i64") }),
    }
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`, `g >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a as i128, b as i128);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (r0, x0, y0) = (-r0, -x0, -y0);
    }
    (r0 as i64, x0 as i64, y0 as i64)
}

/// A multiset of prime factors, sorted ascending. Exponents are at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: i64,
    factors: Vec<(i64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> i64 {
        self.n
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(i64, u32)] {
        &self.factors
    }

    /// All positive divisors of `n`, sorted ascending.
    pub fn divisors(&self) -> Vec<i64> {
        let mut divs = vec![1i64];
        for &(p, e) in &self.factors {
            let prev = divs.clone();
            let mut pk = 1i64;
            for _ in 0..e {
                pk *= p; // divides n, cannot overflow
                divs.extend(prev.iter().map(|d| d * pk));
            }
        }
        divs.sort_unstable();
        divs
    }

    /// True when no prime occurs with exponent 2 or more.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }
}

/// Trial-division factorization of `n` with the default bound.
pub fn factorize(n: i64) -> Result<Factorization> {
    factorize_bounded(n, DEFAULT_FACTOR_BOUND)
}

/// Trial-division factorization of `n`, refusing inputs outside `1..=bound`.
pub fn factorize_bounded(n: i64, bound: i64) -> Result<Factorization> {
    if n < 1 || n > bound {
        return Err(Error::RangeExceeded { what: format!("factorize: {n} outside [1, {bound}]") });
    }
    let mut m = n;
    let mut factors = Vec::new();
    let mut push = |p: i64, m: &mut i64| {
        let mut e = 0u32;
        while *m % p == 0 {
            *m /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(2, &mut m);
    let mut p = 3i64;
    while p.saturating_mul(p) <= m {
        push(p, &mut m);
        p += 2;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

/// Deterministic trial-division primality test. `n < 2` is not prime.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut p = 3i64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            return false;
        }
        p += 2;
    }
    true
}

/// True iff `n` has no repeated prime factor. Accepts any nonzero `|n| <=` the
/// default factor bound; sign is ignored.
pub fn is_squarefree(n: i64) -> Result<bool> {
    if n == 0 {
        return Ok(false);
    }
    let abs = n.checked_abs().ok_or_else(|| Error::RangeExceeded {
        what: "is_squarefree: |i64::MIN| overflows".to_string(),
    })?;
    Ok(factorize(abs)?.is_squarefree())
}

/// Euler's totient of `n >= 1`.
pub fn euler_phi(n: i64) -> Result<i64> {
    let f = factorize(n)?;
    let mut phi = 1i64;
    for &(p, e) in f.factors() {
        let mut pk = 1i64;
        for _ in 0..e - 1 {
            pk *= p;
        }
        phi = phi
            .checked_mul(pk)
            .and_then(|v| v.checked_mul(p - 1))
            .ok_or_else(|| Error::RangeExceeded { what: format!("euler_phi({n}) overflows i64") })?;
    }
    Ok(phi)
}

/// `base^exp mod m` for `m >= 1`, result in `0..m`.
pub fn mod_pow(base: i64, mut exp: u64, m: i64) -> i64 {
    assert!(m >= 1, "mod_pow: modulus must be positive");
    let m = m as u128;
    let mut b = (base.rem_euclid(m as i64)) as u128;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as i64
}

/// Legendre symbol `(a/p)` via Euler's criterion. `p` must be an odd prime.
pub fn legendre(a: i64, p: i64) -> Result<i64> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { value: p });
    }
    let r = a.rem_euclid(p);
    if r == 0 {
        return Ok(0);
    }
    let e = mod_pow(r, ((p - 1) / 2) as u64, p);
    Ok(if e == 1 { 1 } else { -1 })
}

/// Smallest non-negative square root of `d` modulo an odd prime `p`, if one
/// exists. Found by exhaustive scan over residues (exact, and plenty fast for
/// `p` up to [`DEFAULT_SCAN_BOUND`]; larger moduli are refused).
pub fn sqrt_mod(d: i64, p: i64) -> Result<Option<i64>> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotAnOddPrime { value: p });
    }
    if p > DEFAULT_SCAN_BOUND {
        return Err(Error::RangeExceeded {
            what: format!("sqrt_mod: modulus {p} above scan bound {DEFAULT_SCAN_BOUND}"),
        });
    }
    let target = d.rem_euclid(p);
    for a in 0..p {
        if (a as i128 * a as i128).rem_euclid(p as i128) as i64 == target {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Smallest non-negative `k` with `c*k ≡ rhs (mod m)`, if any. `m >= 1`.
pub fn solve_linear_congruence(c: i64, rhs: i64, m: i64) -> Option<i64> {
    assert!(m >= 1, "solve_linear_congruence: modulus must be positive");
    let g = gcd(c, m);
    let rhs = rhs.rem_euclid(m);
    if g == 0 {
        // c ≡ 0: solvable iff rhs ≡ 0, and then k = 0 works.
        return if rhs == 0 { Some(0) } else { None };
    }
    if rhs % g != 0 {
        return None;
    }
    // Solve (c/g) k ≡ rhs/g (mod m/g), then the smallest solution mod m/g
    // is also the smallest mod m.
    let (c1, r1, m1) = (c.rem_euclid(m) / g, rhs / g, m / g);
    if m1 == 1 {
        return Some(0);
    }
    let (_, inv, _) = extended_gcd(c1, m1);
    Some((inv as i128 * r1 as i128).rem_euclid(m1 as i128) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(36, 12), 12);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(i64::MIN, 3), 1);
        assert_eq!(gcd(7, 0), 7);
    }

    #[test]
    fn lcm_values_and_overflow() {
        assert_eq!(lcm(2, 3).unwrap(), 6);
        assert_eq!(lcm(4, 6).unwrap(), 12);
        assert_eq!(lcm(0, 5).unwrap(), 0);
        assert!(matches!(
            lcm(i64::MAX, i64::MAX - 1),
            Err(Error::RangeExceeded { .. })
        ));
    }

    #[test]
    fn extended_gcd_bezout() {
        for &(a, b) in &[(240, 46), (-17, 31), (0, 7), (12, 0), (-5, -15)] {
            let (g, x, y) = extended_gcd(a, b);
            assert_eq!(g, gcd(a, b));
            assert_eq!(a as i128 * x as i128 + b as i128 * y as i128, g as i128);
        }
    }

    #[test]
    fn factorize_small() {
        let f = factorize(12).unwrap();
        assert_eq!(f.factors(), &[(2, 2), (3, 1)]);
        assert_eq!(f.divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert!(!f.is_squarefree());
        let f = factorize(1).unwrap();
        assert_eq!(f.factors(), &[]);
        assert_eq!(f.divisors(), vec![1]);
    }

    #[test]
    fn factorize_rejects_out_of_range() {
        assert!(matches!(factorize(0), Err(Error::RangeExceeded { .. })));
        assert!(matches!(factorize(-6), Err(Error::RangeExceeded { .. })));
        assert!(matches!(
            factorize_bounded(1_000, 999),
            Err(Error::RangeExceeded { .. })
        ));
    }

    #[test]
    fn primality() {
        let primes: Vec<i64> = (2..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(!is_prime(1));
        assert!(!is_prime(-7));
        assert!(is_prime(999_999_937));
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(6).unwrap());
        assert!(is_squarefree(-5).unwrap());
        assert!(!is_squarefree(12).unwrap());
        assert!(!is_squarefree(0).unwrap());
        assert!(is_squarefree(1).unwrap());
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(3).unwrap(), 2);
        assert_eq!(euler_phi(10).unwrap(), 4);
        assert_eq!(euler_phi(1).unwrap(), 1);
    }

    #[test]
    fn legendre_symbol() {
        assert_eq!(legendre(-20, 3).unwrap(), 1);
        assert_eq!(legendre(-20, 11).unwrap(), -1);
        assert_eq!(legendre(6, 3).unwrap(), 0);
        assert!(matches!(legendre(3, 2), Err(Error::NotAnOddPrime { value: 2 })));
        assert!(matches!(legendre(3, 9), Err(Error::NotAnOddPrime { value: 9 })));
    }

    #[test]
    fn legendre_matches_square_scan() {
        for p in [3i64, 5, 7, 11, 13, 17, 19, 23] {
            let squares: std::collections::HashSet<i64> =
                (1..p).map(|a| a * a % p).collect();
            for a in -30i64..30 {
                let expect = if a.rem_euclid(p) == 0 {
                    0
                } else if squares.contains(&a.rem_euclid(p)) {
                    1
                } else {
                    -1
                };
                assert_eq!(legendre(a, p).unwrap(), expect, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(sqrt_mod(-5, 3).unwrap(), Some(1));
        assert_eq!(sqrt_mod(-5, 7).unwrap(), Some(3));
        assert_eq!(sqrt_mod(3, 7).unwrap(), None);
        assert_eq!(sqrt_mod(0, 5).unwrap(), Some(0));
        assert!(matches!(sqrt_mod(1, 4), Err(Error::NotAnOddPrime { .. })));
        assert!(matches!(
            sqrt_mod(1, 1_000_003),
            Err(Error::RangeExceeded { .. })
        ));
    }

    #[test]
    fn sqrt_mod_returns_smallest_root() {
        for p in [3i64, 5, 7, 11, 13] {
            for d in -20..20 {
                if let Some(a) = sqrt_mod(d, p).unwrap() {
                    assert_eq!((a * a).rem_euclid(p), d.rem_euclid(p));
                    for b in 0..a {
                        assert_ne!((b * b).rem_euclid(p), d.rem_euclid(p), "smaller root {b} exists");
                    }
                }
            }
        }
    }

    #[test]
    fn linear_congruences() {
        assert_eq!(solve_linear_congruence(2, 1, 3), Some(2));
        assert_eq!(solve_linear_congruence(1, 5, 7), Some(5));
        assert_eq!(solve_linear_congruence(2, 1, 4), None);
        assert_eq!(solve_linear_congruence(0, 0, 6), Some(0));
        assert_eq!(solve_linear_congruence(0, 3, 6), None);
        // exhaustively cross-check against a scan
        for m in 1..30i64 {
            for c in -10..10 {
                for rhs in -10..10 {
                    let brute = (0..m).find(|&k| (c * k - rhs).rem_euclid(m) == 0);
                    assert_eq!(solve_linear_congruence(c, rhs, m), brute, "c={c} rhs={rhs} m={m}");
                }
            }
        }
    }
}
