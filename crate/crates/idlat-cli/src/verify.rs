//! The `verify-paper` subcommand: every worked example the library is built
//! around, re-checked from scratch as a quick regression suite.

use idlat::arith;
use idlat::chains::{self, StationaryVerdict};
use idlat::finite_lattice::{self, FiniteLattice};
use idlat::quad::{self, Principality, QuadIdeal, QuadRing, SplitKind};
use idlat::zn::{self, ZnIdeal};

pub struct Check {
    pub name: &'static str,
    pub run: fn() -> Result<(), String>,
}

macro_rules! expect {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn lib<T>(r: idlat::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const CHECKS: &[Check] = &[
    Check { name: "Z/6Z has ideals (1),(2),(3),(0), all idempotent", run: z6_lattice },
    Check { name: "Z/6Z is neither boolean nor a field", run: z6_not_boolean },
    Check { name: "Z/10Z has 4 idempotent ideals, not boolean", run: z10_lattice },
    Check { name: "(2) in Z/4Z and (6) in Z/12Z square to zero", run: nilpotent_squares },
    Check { name: "all ideals idempotent iff n squarefree (n<=1000)", run: squarefree_sweep },
    Check { name: "Z[sqrt(-5)]: I1*I2=(3), J1*J2=(7)", run: rational_products },
    Check { name: "Z[sqrt(-5)]: I1*J1=(4+sqrt(-5)), I2*J2=(4-sqrt(-5))", run: mixed_products },
    Check { name: "Z[sqrt(-5)]: factors non-principal, products principal", run: principality },
    Check { name: "splitting of 2,3,5,11 in Z[sqrt(-5)]", run: splitting_examples },
    Check { name: "split primes satisfy P*conj(P)=P meet conj(P)", run: product_intersection },
    Check { name: "P({2,3}) and P({2,3,5}) match the ideal lattices", run: powerset_isos },
    Check { name: "radical chain ascends strictly, never stationary", run: radical_chain },
    Check { name: "I(Z_n) modular and distributive (n<=100)", run: lattice_laws },
];

/// Run every check, returning (name, outcome) pairs in declaration order.
pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    CHECKS.iter().map(|c| (c.name, (c.run)())).collect()
}

fn z6_lattice() -> Result<(), String> {
    let ideals = lib(zn::ideals(6))?;
    let gens: Vec<i64> = ideals.iter().map(|i| i.generator()).collect();
    expect!(gens == [1, 2, 3, 6], "generators {gens:?}");
    for i in &ideals {
        expect!(i.is_idempotent(), "{i} not idempotent");
    }
    Ok(())
}

fn z6_not_boolean() -> Result<(), String> {
    expect!(!lib(zn::is_boolean_ring(6))?, "Z/6Z reported boolean");
    expect!((2 * 2) % 6 != 2, "witness 2 broke");
    expect!(!lib(zn::is_field(6))?, "Z/6Z reported a field");
    Ok(())
}

fn z10_lattice() -> Result<(), String> {
    let ideals = lib(zn::ideals(10))?;
    let gens: Vec<i64> = ideals.iter().map(|i| i.generator()).collect();
    expect!(gens == [1, 2, 5, 10], "generators {gens:?}");
    expect!(ideals.iter().all(|i| i.is_idempotent()), "non-idempotent ideal");
    expect!(!lib(zn::is_boolean_ring(10))?, "Z/10Z reported boolean");
    Ok(())
}

fn nilpotent_squares() -> Result<(), String> {
    for (n, g) in [(4, 2), (12, 6)] {
        let i = lib(ZnIdeal::new(n, g))?;
        let sq = lib(i.product(&i))?;
        expect!(sq.is_zero() && !i.is_idempotent(), "({g})^2 in Z/{n}Z gave {sq}");
    }
    Ok(())
}

fn squarefree_sweep() -> Result<(), String> {
    for n in 2..=1000 {
        let idem = lib(zn::all_ideals_idempotent(n))?;
        let sf = lib(arith::is_squarefree(n))?;
        expect!(idem == sf, "n={n}: idempotent={idem}, squarefree={sf}");
    }
    Ok(())
}

fn standard_ideals() -> Result<(QuadRing, [QuadIdeal; 4]), String> {
    let r = lib(QuadRing::new(-5))?;
    let mk = |n, y| QuadIdeal::from_generators(r, &[r.int(n, 0), r.int(4, y)]);
    Ok((r, [lib(mk(3, 1))?, lib(mk(3, -1))?, lib(mk(7, 1))?, lib(mk(7, -1))?]))
}

fn rational_products() -> Result<(), String> {
    let (r, [i1, i2, j1, j2]) = standard_ideals()?;
    expect!(
        lib(i1.mul(&i2))? == lib(QuadIdeal::principal(&r.int(3, 0)))?,
        "I1*I2 is not (3)"
    );
    expect!(
        lib(j1.mul(&j2))? == lib(QuadIdeal::principal(&r.int(7, 0)))?,
        "J1*J2 is not (7)"
    );
    Ok(())
}

fn mixed_products() -> Result<(), String> {
    let (r, [i1, i2, j1, j2]) = standard_ideals()?;
    expect!(
        lib(i1.mul(&j1))? == lib(QuadIdeal::principal(&r.int(4, 1)))?,
        "I1*J1 is not (4+sqrt(-5))"
    );
    expect!(
        lib(i2.mul(&j2))? == lib(QuadIdeal::principal(&r.int(4, -1)))?,
        "I2*J2 is not (4-sqrt(-5))"
    );
    Ok(())
}

fn principality() -> Result<(), String> {
    let (_, factors) = standard_ideals()?;
    for f in &factors {
        let v = lib(quad::is_principal(f, quad::DEFAULT_SEARCH_BOUND))?;
        expect!(v == Principality::NotPrincipal, "{f} not proven non-principal: {v:?}");
    }
    let (_, [i1, i2, j1, j2]) = standard_ideals()?;
    for p in [lib(i1.mul(&i2))?, lib(j1.mul(&j2))?, lib(i1.mul(&j1))?, lib(i2.mul(&j2))?] {
        let v = lib(quad::is_principal(&p, quad::DEFAULT_SEARCH_BOUND))?;
        expect!(matches!(v, Principality::Principal(_)), "{p} not found principal: {v:?}");
    }
    Ok(())
}

fn splitting_examples() -> Result<(), String> {
    let r = lib(QuadRing::new(-5))?;
    for (p, kind) in [
        (2, SplitKind::Ramified),
        (3, SplitKind::Split),
        (5, SplitKind::Ramified),
        (11, SplitKind::Inert),
    ] {
        let s = lib(quad::split_prime(r, p))?;
        expect!(s.kind() == kind, "p={p}: got {:?}, expected {kind:?}", s.kind());
        let back = lib(s.recompose())?;
        expect!(
            back == lib(QuadIdeal::principal(&r.int(p, 0)))?,
            "p={p}: recomposition gave {back}"
        );
    }
    Ok(())
}

fn product_intersection() -> Result<(), String> {
    for (d, p) in [(-5, 3), (-5, 7), (-7, 2), (5, 11)] {
        let r = lib(QuadRing::new(d))?;
        let s = lib(quad::split_prime(r, p))?;
        let [a, b] = s.prime_factors()[..] else {
            return Err(format!("d={d}, p={p}: expected a split prime"));
        };
        expect!(
            lib(a.mul(&b))? == lib(a.intersect(&b))?,
            "d={d}, p={p}: product differs from intersection"
        );
    }
    Ok(())
}

fn powerset_isos() -> Result<(), String> {
    for primes in [&[2i64, 3][..], &[2, 3, 5]] {
        let m = lib(finite_lattice::zn_powerset_iso(primes))?;
        let v = finite_lattice::verify_isomorphism(&m);
        expect!(v.holds, "primes {primes:?}: {:?}", v.failure);
    }
    Ok(())
}

fn radical_chain() -> Result<(), String> {
    let chain = lib(chains::radical_chain(5, 20))?;
    for w in chain.windows(2) {
        expect!(
            lib(w[0].ideal_leq(&w[1]))? && !lib(w[1].ideal_leq(&w[0]))?,
            "{} to {} is not a strict step",
            w[0],
            w[1]
        );
    }
    let verdict = lib(chains::detect_stationary(
        (1..=21).map(|k| chains::radical_chain_step(5, k).expect("in-range step")),
        |a, b| a.ideal_leq(b).expect("single base"),
        |a, b| a == b,
        20,
    ))?;
    expect!(
        verdict == StationaryVerdict::NotStationaryWithin(20),
        "verdict {verdict:?}"
    );
    Ok(())
}

fn lattice_laws() -> Result<(), String> {
    for n in 2..=100 {
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
        let l = lib(FiniteLattice::from_order(labels, &rel))?;
        expect!(lib(l.is_modular())?.holds, "I(Z_{n}) not modular");
        expect!(lib(l.is_distributive())?.holds, "I(Z_{n}) not distributive");
    }
    Ok(())
}
