//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`, or on failure).
//!
//! Checks here are deliberately spelled out against independent reference
//! computations — classical splitting criteria, element-set arithmetic,
//! minimal polynomials — rather than against the code paths they validate.

use idlat::arith;
use idlat::chains::{self, StationaryVerdict};
use idlat::finite_lattice::{self, FiniteLattice};
use idlat::quad::{self, Principality, QuadIdeal, QuadRing, SplitKind, Splitting};
use idlat::zn::{self, ZnIdeal};
use num_rational::Ratio;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// Adapt library errors into criterion failures instead of bare panics, so
/// the FAIL line still gets printed.
fn lib<T>(r: idlat::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn conclude(id: u32, what: &str, outcome: Result<String, String>) {
    match &outcome {
        Ok(detail) => println!("criterion {id:02} PASS  {what}: {detail}"),
        Err(detail) => println!("criterion {id:02} FAIL  {what}: {detail}"),
    }
    if let Err(detail) = outcome {
        panic!("criterion {id:02} failed: {detail}");
    }
}

#[test]
fn criterion_01_z6_regression() {
    conclude(1, "Z/6Z", (|| {
        let ideals = lib(zn::ideals(6))?;
        let gens: Vec<i64> = ideals.iter().map(|i| i.generator()).collect();
        ensure!(gens == [1, 2, 3, 6], "expected ideal generators [1,2,3,6], got {gens:?}");
        for i in &ideals {
            ensure!(i.is_idempotent(), "{i} is not idempotent");
        }
        ensure!(!lib(zn::is_boolean_ring(6))?, "Z/6Z reported boolean");
        ensure!((2 * 2) % 6 == 4 && 4 != 2, "boolean witness 2^2=4 broke");
        ensure!(!lib(zn::is_field(6))?, "Z/6Z reported a field");
        Ok("4 ideals (1),(2),(3),(0), all idempotent; not boolean (2^2=4); not a field".into())
    })());
}

#[test]
fn criterion_02_z10_regression() {
    conclude(2, "Z/10Z", (|| {
        let ideals = lib(zn::ideals(10))?;
        let gens: Vec<i64> = ideals.iter().map(|i| i.generator()).collect();
        ensure!(gens == [1, 2, 5, 10], "expected ideal generators [1,2,5,10], got {gens:?}");
        for i in &ideals {
            ensure!(i.is_idempotent(), "{i} is not idempotent");
        }
        ensure!(!lib(zn::is_boolean_ring(10))?, "Z/10Z reported boolean");
        ensure!((3 * 3) % 10 == 9 && 9 != 3, "boolean witness 3^2=9 broke");
        ensure!(!lib(zn::is_field(10))?, "Z/10Z reported a field");
        Ok("4 ideals, all idempotent; not boolean (3^2=9); not a field".into())
    })());
}

#[test]
fn criterion_03_nilpotent_squares() {
    conclude(3, "Z/4Z and Z/12Z", (|| {
        let two = lib(ZnIdeal::new(4, 2))?;
        let sq = lib(two.product(&two))?;
        ensure!(sq.is_zero(), "(2)^2 in Z/4Z is {sq}, expected the zero ideal");
        ensure!(!two.is_idempotent(), "(2) in Z/4Z reported idempotent");

        let six = lib(ZnIdeal::new(12, 6))?;
        let sq = lib(six.product(&six))?;
        ensure!(sq.is_zero(), "(6)^2 in Z/12Z is {sq}, expected the zero ideal");
        ensure!(!six.is_idempotent(), "(6) in Z/12Z reported idempotent");
        Ok("(2)^2 = (0) in Z/4Z and (6)^2 = (0) in Z/12Z; neither idempotent".into())
    })());
}

#[test]
fn criterion_04_squarefree_theorem() {
    conclude(4, "idempotency <=> squarefree", (|| {
        let mut composites = 0usize;
        for n in 4..=10_000i64 {
            if arith::is_prime(n) {
                continue;
            }
            composites += 1;
            let all_idem = lib(zn::all_ideals_idempotent(n))?;
            let squarefree = lib(arith::is_squarefree(n))?;
            ensure!(
                all_idem == squarefree,
                "n={n}: all_ideals_idempotent={all_idem} but is_squarefree={squarefree}"
            );
        }
        // Independent confirmation at element level: square each ideal as a
        // literal set of residues and compare against the generator verdict.
        let mut confirmed = 0usize;
        for n in 4..=200i64 {
            if arith::is_prime(n) {
                continue;
            }
            confirmed += 1;
            let mut all_idem_by_sets = true;
            for i in lib(zn::ideals(n))? {
                let set = lib(i.elements())?;
                let square = lib(set.product(&set))?;
                if square.residues() != set.residues() {
                    all_idem_by_sets = false;
                }
            }
            let all_idem = lib(zn::all_ideals_idempotent(n))?;
            ensure!(
                all_idem_by_sets == all_idem,
                "n={n}: element-set oracle says {all_idem_by_sets}, divisor arithmetic says {all_idem}"
            );
        }
        Ok(format!(
            "equality holds for all {composites} composite n in [4,10000]; \
             element-set oracle agrees for {confirmed} composite n <= 200"
        ))
    })());
}

#[test]
fn criterion_05_worked_products_in_z_sqrt_minus5() {
    conclude(5, "Z[sqrt(-5)] worked products", (|| {
        let r = lib(QuadRing::new(-5))?;
        let gen = |x, y| r.int(x, y);
        let two_gen = |n, g: (i64, i64)| {
            QuadIdeal::from_generators(r, &[gen(n, 0), gen(g.0, g.1)]).map_err(|e| e.to_string())
        };
        let i1 = two_gen(3, (4, 1))?;
        let i2 = two_gen(3, (4, -1))?;
        let j1 = two_gen(7, (4, 1))?;
        let j2 = two_gen(7, (4, -1))?;

        let cases = [
            (i1.mul(&i2), gen(3, 0), "I1*I2 = (3)"),
            (j1.mul(&j2), gen(7, 0), "J1*J2 = (7)"),
            (i1.mul(&j1), gen(4, 1), "I1*J1 = (4+sqrt(-5))"),
            (i2.mul(&j2), gen(4, -1), "I2*J2 = (4-sqrt(-5))"),
        ];
        for (product, expected_gen, label) in cases {
            let product = lib(product)?;
            let expected = lib(QuadIdeal::principal(&expected_gen))?;
            ensure!(product == expected, "{label} failed: got {product}, expected {expected}");
            match lib(quad::is_principal(&product, quad::DEFAULT_SEARCH_BOUND))? {
                Principality::Principal(_) => {}
                other => ensure!(false, "{label}: product not recognized principal ({other:?})"),
            }
        }
        for (f, name) in [(&i1, "I1"), (&i2, "I2"), (&j1, "J1"), (&j2, "J2")] {
            let verdict = lib(quad::is_principal(f, quad::DEFAULT_SEARCH_BOUND))?;
            ensure!(
                verdict == Principality::NotPrincipal,
                "{name} = {f} should be provably non-principal, got {verdict:?}"
            );
        }
        Ok("I1*I2=(3), J1*J2=(7), I1*J1=(4+sqrt(-5)), I2*J2=(4-sqrt(-5)); \
            factors non-principal, products principal"
            .into())
    })());
}

/// The classical decomposition criterion, restated from scratch in terms of
/// the field discriminant so the sweep does not share logic with the library.
fn expected_split_kind(ring: QuadRing, p: i64) -> Result<SplitKind, String> {
    let delta = ring.discriminant();
    if p == 2 {
        if delta % 2 == 0 {
            return Ok(SplitKind::Ramified);
        }
        // delta = d is odd here, so d is 1 or 5 mod 8
        return Ok(if ring.d().rem_euclid(8) == 1 { SplitKind::Split } else { SplitKind::Inert });
    }
    if delta % p == 0 {
        return Ok(SplitKind::Ramified);
    }
    match lib(arith::legendre(delta, p))? {
        1 => Ok(SplitKind::Split),
        -1 => Ok(SplitKind::Inert),
        s => Err(format!("legendre({delta},{p}) = {s} with p coprime to delta")),
    }
}

fn splitting_sweep() -> Result<Vec<(QuadRing, Splitting)>, String> {
    let mut out = Vec::new();
    for d in -50..=50i64 {
        let Ok(ring) = QuadRing::new(d) else { continue }; // skips 0, 1, non-squarefree
        for p in (2..=100).filter(|&p| arith::is_prime(p)) {
            out.push((ring, lib(quad::split_prime(ring, p))?));
        }
    }
    Ok(out)
}

#[test]
fn criterion_06_splitting_matches_classical_criterion() {
    conclude(6, "prime splitting sweep", (|| {
        let sweep = splitting_sweep()?;
        let mut counts = [0usize; 3];
        for (ring, s) in &sweep {
            let p = s.prime();
            let expected = expected_split_kind(*ring, p)?;
            ensure!(
                s.kind() == expected,
                "d={}, p={p}: split_prime says {:?}, criterion says {expected:?}",
                ring.d(),
                s.kind()
            );
            counts[match s.kind() {
                SplitKind::Ramified => 0,
                SplitKind::Split => 1,
                SplitKind::Inert => 2,
            }] += 1;
            let back = lib(s.recompose())?;
            let whole = lib(QuadIdeal::principal(&ring.int(p, 0)))?;
            ensure!(back == whole, "d={}, p={p}: factors recompose to {back}, not (p)", ring.d());
        }
        Ok(format!(
            "{} (d,p) pairs: {} ramified, {} split, {} inert; kinds match the \
             discriminant criterion and all factorizations recompose to (p)",
            sweep.len(),
            counts[0],
            counts[1],
            counts[2]
        ))
    })());
}

#[test]
fn criterion_07_split_product_equals_intersection() {
    conclude(7, "P*conj(P) = P meet conj(P)", (|| {
        let mut split_count = 0usize;
        for (ring, s) in splitting_sweep()? {
            let Splitting::Split { factor, conj_factor, .. } = s else { continue };
            split_count += 1;
            let product = lib(factor.mul(&conj_factor))?;
            let meet = lib(factor.intersect(&conj_factor))?;
            ensure!(
                product == meet,
                "d={}, p={}: product {product} differs from intersection {meet}",
                ring.d(),
                s.prime()
            );
        }
        ensure!(split_count > 0, "sweep produced no split primes");
        Ok(format!("product equals intersection for all {split_count} split primes in the sweep"))
    })());
}

#[test]
fn criterion_08_power_set_isomorphism() {
    conclude(8, "P(M) ~ I(Z_n)", (|| {
        let sets: [&[i64]; 3] = [&[2, 3], &[2, 3, 5], &[2, 3, 5, 7]];
        for primes in sets {
            let m = lib(finite_lattice::zn_powerset_iso(primes))?;
            let verdict = finite_lattice::verify_isomorphism(&m);
            ensure!(
                verdict.holds,
                "primes {primes:?}: isomorphism check failed ({:?})",
                verdict.failure
            );
            let n: i64 = primes.iter().product();
            let expected = 1usize << primes.len();
            ensure!(
                m.source.size() == expected && lib(zn::ideals(n))?.len() == expected,
                "primes {primes:?}: expected {expected} subsets and ideals"
            );
        }
        Ok("order isomorphisms verified for {2,3}, {2,3,5}, {2,3,5,7} with 2^l ideals each".into())
    })());
}

/// Decide whether base^r is an algebraic integer, straight from the minimal
/// polynomial: for r = s/t in lowest terms (t >= 1), base^r is a root of
/// X^t - base^s, and an algebraic number is an algebraic integer exactly when
/// its monic minimal polynomial has integer coefficients — here, when the
/// constant term base^s is an integer. For s >= 0 it is; for s < 0 it equals
/// 1/base^|s|, strictly between 0 and 1.
fn power_is_algebraic_integer(base: i128, r: Ratio<i128>) -> bool {
    let (s, t) = (*r.numer(), *r.denom());
    assert!(base >= 2 && t >= 1);
    if let Ok(e) = u32::try_from(s.unsigned_abs()) {
        if let Some(c) = base.checked_pow(e) {
            let constant = if s >= 0 { Ratio::from_integer(c) } else { Ratio::new(1, c) };
            return constant.is_integer();
        }
    }
    // Constant term too large to materialize; its integrality still only
    // depends on the sign of s.
    s >= 0
}

#[test]
fn criterion_09_non_stationary_radical_chain() {
    conclude(9, "radical chain over O_C", (|| {
        let chain = lib(chains::radical_chain(5, 20))?;
        ensure!(chain.len() == 20, "expected 20 chain elements, got {}", chain.len());
        for (i, w) in chain.windows(2).enumerate() {
            ensure!(lib(w[0].ideal_leq(&w[1]))?, "step {i} not ascending");
            ensure!(!lib(w[1].ideal_leq(&w[0]))?, "step {i} not strict");
        }

        // The chain itself never stops: examine it past the materialized
        // prefix through the step constructor.
        let verdict = lib(chains::detect_stationary(
            (1..=64).map(|k| chains::radical_chain_step(5, k).expect("in-range step")),
            |a, b| a.ideal_leq(b).expect("single base"),
            |a, b| a == b,
            20,
        ))?;
        ensure!(
            verdict == StationaryVerdict::NotStationaryWithin(20),
            "expected NotStationaryWithin(20), got {verdict:?}"
        );

        // Containment rule vs. the minimal-polynomial oracle, all exponent
        // pairs with denominator <= 16.
        let mut exponents = Vec::new();
        for den in 1..=16i128 {
            for num in 1..=24i128 {
                exponents.push(Ratio::new(num, den));
            }
        }
        exponents.sort_unstable();
        exponents.dedup();
        let mut pairs = 0usize;
        for &q1 in &exponents {
            let e1 = lib(chains::RadicalChainElement::new(5, q1))?;
            for &q2 in &exponents {
                let e2 = lib(chains::RadicalChainElement::new(5, q2))?;
                let rule = lib(e1.ideal_leq(&e2))?;
                // (5^q1) subset of (5^q2) iff 5^(q1-q2) is an algebraic integer
                let oracle = power_is_algebraic_integer(5, q1 - q2);
                ensure!(
                    rule == oracle,
                    "exponents {q1} vs {q2}: rule says {rule}, minimal polynomial says {oracle}"
                );
                pairs += 1;
            }
        }
        Ok(format!(
            "5^(1/2^k) chain strictly ascending, NotStationaryWithin(20); \
             containment agrees with the minimal-polynomial oracle on {pairs} exponent pairs"
        ))
    })());
}

#[test]
fn criterion_10_gcd_lcm_identities() {
    conclude(10, "aZ+bZ and aZ meet bZ", (|| {
        let mut checked = 0usize;
        for a in 1..=50i64 {
            for b in 1..=50i64 {
                let n = 4 * lib(arith::lcm(a, b))?;
                let sa = lib(lib(ZnIdeal::new(n, a))?.elements())?;
                let sb = lib(lib(ZnIdeal::new(n, b))?.elements())?;
                let sum = lib(sa.sum(&sb))?;
                let meet = lib(sa.intersect(&sb))?;
                let by_gcd = lib(lib(ZnIdeal::new(n, arith::gcd(a, b)))?.elements())?;
                let by_lcm = lib(lib(ZnIdeal::new(n, lib(arith::lcm(a, b))?))?.elements())?;
                ensure!(
                    sum.residues() == by_gcd.residues(),
                    "a={a}, b={b}: aZ+bZ differs from gcd ideal in Z/{n}Z"
                );
                ensure!(
                    meet.residues() == by_lcm.residues(),
                    "a={a}, b={b}: aZ meet bZ differs from lcm ideal in Z/{n}Z"
                );
                checked += 1;
            }
        }
        Ok(format!("element sets match (gcd) and (lcm) for all {checked} pairs a,b <= 50"))
    })());
}

#[test]
fn criterion_11_ideal_lattices_modular_distributive() {
    conclude(11, "I(Z_n) lattice laws", (|| {
        for n in 2..=500i64 {
            let ideals = lib(zn::ideals(n))?;
            let labels: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
            let mut rel = Vec::new();
            for (a, i) in ideals.iter().enumerate() {
                for (b, j) in ideals.iter().enumerate() {
                    if lib(i.is_subset_of(j))? {
                        rel.push((a, b));
                    }
                }
            }
            let lattice = lib(FiniteLattice::from_order(labels, &rel))?;
            let modular = lib(lattice.is_modular())?;
            ensure!(modular.holds, "I(Z_{n}) not modular: witness {:?}", modular.witness);
            let distributive = lib(lattice.is_distributive())?;
            ensure!(
                distributive.holds,
                "I(Z_{n}) not distributive: witness {:?}",
                distributive.witness
            );
        }
        Ok("I(Z_n) is modular and distributive for every n <= 500".into())
    })());
}
