//! `idlat` — exact ideal arithmetic on the command line.
//!
//! Every subcommand prints a human-readable summary by default, or a single
//! JSON object (schema 1, stable key order) with `--json`. Exit codes:
//! 0 success, 1 domain error (rendered with its error kind), 2 usage error.

mod parse;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use idlat::arith;
use idlat::chains::{self, Exponent, RadicalChainElement, StationaryVerdict};
use idlat::finite_lattice::{self, FiniteLattice};
use idlat::quad::{self, Principality, QuadIdeal, QuadRing, Splitting};
use idlat::zn::{self, ZnIdeal};
use parse::IdealSpec;

#[derive(Parser)]
#[command(name = "idlat", version, about = "Exact ideal arithmetic: Z/nZ, quadratic rings, finite lattices")]
struct Cli {
    /// Emit one machine-readable JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Integer groundwork: factorization, Legendre symbols, modular square roots
    #[command(subcommand)]
    Arith(ArithCmd),
    /// The ideal lattice of Z/nZ
    #[command(subcommand)]
    Zn(ZnCmd),
    /// Ideal arithmetic in quadratic rings of integers
    #[command(subcommand)]
    Quad(QuadCmd),
    /// Finite lattices: order files, power sets, isomorphism checks
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Ascending chains and stationarity detection
    #[command(subcommand)]
    Chains(ChainsCmd),
    /// Re-run the built-in worked examples as a regression suite
    VerifyPaper,
}

#[derive(Subcommand)]
enum ArithCmd {
    /// Factor n by trial division
    #[command(allow_negative_numbers = true)]
    Factor {
        n: i64,
        /// Largest modulus the trial division will accept
        #[arg(long, env = "IDLAT_FACTOR_BOUND", default_value_t = arith::DEFAULT_FACTOR_BOUND)]
        bound: i64,
    },
    /// Legendre symbol (a/p) for an odd prime p
    #[command(allow_negative_numbers = true)]
    Legendre { a: i64, p: i64 },
    /// Smallest square root of a mod p, if one exists
    #[command(allow_negative_numbers = true)]
    Sqrtmod { a: i64, p: i64 },
}

#[derive(Subcommand)]
enum ZnCmd {
    /// List every ideal of Z/nZ with its idempotency flag
    Lattice { n: i64 },
    /// Idempotency of each ideal, the squarefree criterion, and (for small n)
    /// an element-level cross-check
    Idempotent {
        n: i64,
        /// Largest n for which the element-set oracle is consulted
        #[arg(long, env = "IDLAT_ELEMENT_CAP", default_value_t = zn::DEFAULT_MATERIALIZE_BOUND)]
        element_cap: i64,
    },
    /// Is Z/nZ a Boolean ring? A field?
    Boolean { n: i64 },
    /// Product of the ideals generated by d1 and d2 in Z/nZ
    Product { n: i64, d1: i64, d2: i64 },
    /// Stationarity of an explicit ascending chain of ideals, given as g/n
    /// elements (e.g. 4/12 2/12 2/12)
    Chain {
        #[arg(required = true, value_parser = parse::parse_zn_elem)]
        elements: Vec<(i64, i64)>,
    },
}

#[derive(Subcommand)]
enum QuadCmd {
    /// Field discriminant and module generator of Q(sqrt d)
    #[command(allow_negative_numbers = true)]
    Disc { d: i64 },
    /// How the prime p factors in the ring of integers of Q(sqrt d)
    #[command(allow_negative_numbers = true)]
    Split {
        d: i64,
        p: i64,
        /// Search bound for the principality check of each factor
        #[arg(long, env = "IDLAT_PRINCIPAL_BOUND", default_value_t = quad::DEFAULT_SEARCH_BOUND)]
        bound: i64,
    },
    /// Product of two ideals, each a comma-separated generator list like 3,4+w
    #[command(allow_negative_numbers = true)]
    Mul {
        d: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        left: IdealSpec,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        right: IdealSpec,
    },
    /// Sum of two ideals
    #[command(allow_negative_numbers = true)]
    Sum {
        d: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        left: IdealSpec,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        right: IdealSpec,
    },
    /// Intersection of two ideals
    #[command(allow_negative_numbers = true)]
    Intersect {
        d: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        left: IdealSpec,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        right: IdealSpec,
    },
    /// Decide (or bound the search for) principality of an ideal
    #[command(allow_negative_numbers = true)]
    Principal {
        d: i64,
        #[arg(allow_hyphen_values = true, value_parser = parse::parse_ideal_spec)]
        ideal: IdealSpec,
        /// Norm-form search bound
        #[arg(long, env = "IDLAT_PRINCIPAL_BOUND", default_value_t = quad::DEFAULT_SEARCH_BOUND)]
        bound: i64,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Verify P({p1..pl}) is isomorphic to the ideal lattice of Z/(p1*..*pl)Z
    #[command(allow_negative_numbers = true)]
    PowersetIso {
        #[arg(required = true)]
        primes: Vec<i64>,
    },
    /// Analyze a finite order given in a file: k, k labels, then "i <= j" lines
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum ChainsCmd {
    /// The ascending chain (b^(1/2)) ⊂ (b^(1/4)) ⊂ … and its verdict
    Radical {
        base: i64,
        /// Number of chain elements to materialize (detection looks one past)
        #[arg(value_parser = clap::value_parser!(u32).range(1..=63))]
        steps: u32,
    },
    /// Stationarity of an explicit chain of b^(s/t) elements (e.g. 5^1/2 5^1/4)
    Detect {
        #[arg(required = true, value_parser = parse::parse_radical_elem)]
        elements: Vec<(i64, Exponent)>,
        /// How many steps to examine (defaults to the chain length)
        #[arg(long)]
        budget: Option<usize>,
    },
}

struct Body {
    result: Value,
    human: String,
    ok: bool,
}

struct Outcome {
    command: &'static str,
    input: Value,
    body: Result<Body, idlat::Error>,
}

fn done(result: Value, human: String) -> Result<Body, idlat::Error> {
    Ok(Body { result, human, ok: true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(cli.command);
    let code = match &outcome.body {
        Ok(b) if b.ok => 0u8,
        _ => 1,
    };
    if cli.json {
        let v = match &outcome.body {
            Ok(b) => json!({
                "schema": 1,
                "command": outcome.command,
                "input": outcome.input,
                "result": b.result,
                "status": "ok",
            }),
            Err(e) => json!({
                "schema": 1,
                "command": outcome.command,
                "input": outcome.input,
                "error": { "kind": e.kind(), "message": e.to_string() },
                "status": "error",
            }),
        };
        println!("{v}");
    } else {
        match &outcome.body {
            Ok(b) => println!("{}", b.human),
            Err(e) => eprintln!("error[{}]: {e}", e.kind()),
        }
    }
    ExitCode::from(code)
}

fn run(cmd: Cmd) -> Outcome {
    match cmd {
        Cmd::Arith(c) => run_arith(c),
        Cmd::Zn(c) => run_zn(c),
        Cmd::Quad(c) => run_quad(c),
        Cmd::Lattice(c) => run_lattice(c),
        Cmd::Chains(c) => run_chains(c),
        Cmd::VerifyPaper => run_verify(),
    }
}

// ---------------------------------------------------------------- arith

fn run_arith(cmd: ArithCmd) -> Outcome {
    match cmd {
        ArithCmd::Factor { n, bound } => Outcome {
            command: "arith factor",
            input: json!({ "n": n, "bound": bound }),
            body: arith::factorize_bounded(n, bound).and_then(|f| {
                let factors: Vec<Value> =
                    f.factors().iter().map(|&(p, e)| json!([p, e])).collect();
                let text = if f.factors().is_empty() {
                    "1".to_string()
                } else {
                    f.factors()
                        .iter()
                        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                        .collect::<Vec<_>>()
                        .join(" * ")
                };
                let divisors = f.divisors();
                let squarefree = f.is_squarefree();
                let human = format!(
                    "{n} = {text}\ndivisors ({}): {}\nsquarefree: {}",
                    divisors.len(),
                    join(&divisors),
                    yes_no(squarefree)
                );
                done(
                    json!({
                        "factors": factors,
                        "divisors": divisors,
                        "squarefree": squarefree,
                    }),
                    human,
                )
            }),
        },
        ArithCmd::Legendre { a, p } => Outcome {
            command: "arith legendre",
            input: json!({ "a": a, "p": p }),
            body: arith::legendre(a, p).and_then(|s| {
                done(json!({ "symbol": s }), format!("({a}/{p}) = {s}"))
            }),
        },
        ArithCmd::Sqrtmod { a, p } => Outcome {
            command: "arith sqrtmod",
            input: json!({ "a": a, "p": p }),
            body: arith::sqrt_mod(a, p).and_then(|root| {
                let human = match root {
                    Some(r) => format!("sqrt({a}) mod {p} = {r}"),
                    None => format!("{a} is not a square mod {p}"),
                };
                done(json!({ "root": root }), human)
            }),
        },
    }
}

// ---------------------------------------------------------------- zn

fn zn_ideal_json(i: &ZnIdeal) -> Value {
    json!({
        "generator": i.generator(),
        "display": i.to_string(),
        "idempotent": i.is_idempotent(),
    })
}

fn run_zn(cmd: ZnCmd) -> Outcome {
    match cmd {
        ZnCmd::Lattice { n } => Outcome {
            command: "zn lattice",
            input: json!({ "n": n }),
            body: zn::ideals(n).and_then(|ideals| {
                let mut lines = vec![format!("I(Z/{n}Z): {} ideals", ideals.len())];
                for i in &ideals {
                    lines.push(format!(
                        "  d={:<4} {:<16} {}",
                        i.generator(),
                        i.to_string(),
                        if i.is_idempotent() { "idempotent" } else { "not idempotent" }
                    ));
                }
                let all = ideals.iter().all(|i| i.is_idempotent());
                lines.push(format!("all ideals idempotent: {}", yes_no(all)));
                done(
                    json!({
                        "count": ideals.len(),
                        "ideals": ideals.iter().map(zn_ideal_json).collect::<Vec<_>>(),
                        "all_idempotent": all,
                    }),
                    lines.join("\n"),
                )
            }),
        },
        ZnCmd::Idempotent { n, element_cap } => Outcome {
            command: "zn idempotent",
            input: json!({ "n": n, "element_cap": element_cap }),
            body: (|| {
                let ideals = zn::ideals(n)?;
                let all = zn::all_ideals_idempotent(n)?;
                let squarefree = arith::is_squarefree(n)?;
                let mut lines = Vec::new();
                for i in &ideals {
                    lines.push(format!(
                        "  {:<16} {}",
                        i.to_string(),
                        if i.is_idempotent() { "idempotent" } else { "not idempotent" }
                    ));
                }
                lines.push(format!("all ideals idempotent: {}", yes_no(all)));
                lines.push(format!("n squarefree: {}", yes_no(squarefree)));
                let oracle = if n <= element_cap {
                    let mut agrees = true;
                    for i in &ideals {
                        let set = i.elements()?;
                        let sq = set.product(&set)?;
                        if (sq.residues() == set.residues()) != i.is_idempotent() {
                            agrees = false;
                        }
                    }
                    lines.push(format!("element-set oracle agrees: {}", yes_no(agrees)));
                    json!({ "checked": true, "agrees": agrees })
                } else {
                    lines.push(format!("element-set oracle skipped (n > {element_cap})"));
                    json!({ "checked": false })
                };
                done(
                    json!({
                        "ideals": ideals.iter().map(zn_ideal_json).collect::<Vec<_>>(),
                        "all_idempotent": all,
                        "squarefree": squarefree,
                        "element_oracle": oracle,
                    }),
                    lines.join("\n"),
                )
            })(),
        },
        ZnCmd::Boolean { n } => Outcome {
            command: "zn boolean",
            input: json!({ "n": n }),
            body: (|| {
                let boolean = zn::is_boolean_ring(n)?;
                let witness = (0..n).find(|&x| (x as i128 * x as i128).rem_euclid(n as i128) as i64 != x);
                let field = zn::is_field(n)?;
                let human = match witness {
                    Some(x) => format!(
                        "Z/{n}Z boolean: no (witness {x}^2 = {} != {x})\nZ/{n}Z a field: {}",
                        (x as i128 * x as i128).rem_euclid(n as i128),
                        yes_no(field)
                    ),
                    None => format!("Z/{n}Z boolean: yes\nZ/{n}Z a field: {}", yes_no(field)),
                };
                done(json!({ "boolean": boolean, "witness": witness, "field": field }), human)
            })(),
        },
        ZnCmd::Product { n, d1, d2 } => Outcome {
            command: "zn product",
            input: json!({ "n": n, "d1": d1, "d2": d2 }),
            body: (|| {
                let left = ZnIdeal::new(n, d1)?;
                let right = ZnIdeal::new(n, d2)?;
                let product = left.product(&right)?;
                done(
                    json!({
                        "left": zn_ideal_json(&left),
                        "right": zn_ideal_json(&right),
                        "product": zn_ideal_json(&product),
                    }),
                    format!("{left} * {right} = {product} (generator {})", product.generator()),
                )
            })(),
        },
        ZnCmd::Chain { elements } => Outcome {
            command: "zn chain",
            input: json!({
                "elements": elements.iter().map(|(g, n)| format!("{g}/{n}")).collect::<Vec<_>>(),
            }),
            body: (|| {
                let chain = elements
                    .iter()
                    .map(|&(g, n)| ZnIdeal::new(n, g))
                    .collect::<idlat::Result<Vec<_>>>()?;
                let at = zn::chain_is_stationary(&chain)?;
                let shown = chain.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ⊆ ");
                done(
                    json!({ "chain": chain.iter().map(|i| i.to_string()).collect::<Vec<_>>(),
                            "stationary_at": at }),
                    format!("{shown}\nstationary from index {at}"),
                )
            })(),
        },
    }
}

// ---------------------------------------------------------------- quad

fn quad_ideal_json(i: &QuadIdeal) -> Value {
    json!({ "hnf": i.hnf(), "norm": i.norm(), "display": i.to_string() })
}

fn principality_json(p: &Principality) -> Value {
    match p {
        Principality::Principal(g) => json!({ "principal": "yes", "generator": g.to_string() }),
        Principality::NotPrincipal => json!({ "principal": "no" }),
        Principality::Unknown => json!({ "principal": "unknown" }),
    }
}

fn principality_text(p: &Principality) -> String {
    match p {
        Principality::Principal(g) => format!("principal, generated by {g}"),
        Principality::NotPrincipal => "not principal".to_string(),
        Principality::Unknown => "principality unknown at this bound".to_string(),
    }
}

/// Build the ideal an [`IdealSpec`] describes, defaulting to `ring` unless
/// the argument carried its own `d=<D>:` override.
fn ideal_from_spec(ring: QuadRing, spec: &IdealSpec) -> idlat::Result<QuadIdeal> {
    let ring = match spec.d_override {
        Some(d) => QuadRing::new(d)?,
        None => ring,
    };
    let gens: Vec<_> = spec.gens.iter().map(|&(x, y)| ring.int(x, y)).collect();
    QuadIdeal::from_generators(ring, &gens)
}

fn quad_binop(
    name: &'static str,
    d: i64,
    left: &IdealSpec,
    right: &IdealSpec,
    op: fn(&QuadIdeal, &QuadIdeal) -> idlat::Result<QuadIdeal>,
    symbol: &str,
) -> Outcome {
    Outcome {
        command: name,
        input: json!({ "d": d, "left": left.raw, "right": right.raw }),
        body: (|| {
            let ring = QuadRing::new(d)?;
            let a = ideal_from_spec(ring, left)?;
            let b = ideal_from_spec(ring, right)?;
            let r = op(&a, &b)?;
            done(
                json!({
                    "ring": ring.to_string(),
                    "left": quad_ideal_json(&a),
                    "right": quad_ideal_json(&b),
                    "result": quad_ideal_json(&r),
                }),
                format!("in {ring}: {a} {symbol} {b} = {r} (norm {})", r.norm()),
            )
        })(),
    }
}

fn run_quad(cmd: QuadCmd) -> Outcome {
    match cmd {
        QuadCmd::Disc { d } => Outcome {
            command: "quad disc",
            input: json!({ "d": d }),
            body: QuadRing::new(d).and_then(|ring| {
                let omega = match ring.omega_kind() {
                    quad::OmegaKind::SqrtD => "sqrt(d)",
                    quad::OmegaKind::HalfOnePlusSqrtD => "(1+sqrt(d))/2",
                };
                done(
                    json!({
                        "discriminant": ring.discriminant(),
                        "omega": omega,
                        "ring": ring.to_string(),
                    }),
                    format!(
                        "Q(sqrt({d})): discriminant {}, ring of integers {ring}, w = {omega}",
                        ring.discriminant()
                    ),
                )
            }),
        },
        QuadCmd::Split { d, p, bound } => Outcome {
            command: "quad split",
            input: json!({ "d": d, "p": p, "bound": bound }),
            body: (|| {
                let ring = QuadRing::new(d)?;
                let report = quad::splitting_report(ring, p, bound)?;
                let kind = report.splitting.kind().as_str();
                let mut lines = vec![
                    format!("{p} in {ring}: {kind}"),
                    format!("  criterion: {}", report.criterion),
                ];
                let factors = report.splitting.prime_factors();
                let names: Vec<String> = match &report.splitting {
                    Splitting::Ramified { generator, .. } => {
                        lines.push(format!("  (p) = P^2 with P = ({p}, {generator})"));
                        vec![format!("({p}, {generator})")]
                    }
                    Splitting::Split { generator, conj_generator, .. } => {
                        lines.push(format!(
                            "  (p) = P * conj(P) with P = ({p}, {generator}), conj(P) = ({p}, {conj_generator})"
                        ));
                        vec![format!("({p}, {generator})"), format!("({p}, {conj_generator})")]
                    }
                    Splitting::Inert { .. } => {
                        lines.push(format!("  ({p}) stays prime"));
                        vec![format!("({p})")]
                    }
                };
                let mut factor_json = Vec::new();
                for (k, f) in factors.iter().enumerate() {
                    let verdict = &report.factor_principality[k];
                    lines.push(format!(
                        "  {} = {} (norm {}), {}",
                        names[k],
                        f,
                        f.norm(),
                        principality_text(verdict)
                    ));
                    let mut v = quad_ideal_json(f);
                    v["two_generator"] = Value::String(names[k].clone());
                    v["principality"] = principality_json(verdict);
                    factor_json.push(v);
                }
                lines.push(format!("  factors recompose to ({p}): {}", yes_no(report.recomposition_ok)));
                if let Some(eq) = report.product_equals_intersection {
                    lines.push(format!("  P * conj(P) = P ∩ conj(P): {}", yes_no(eq)));
                }
                done(
                    json!({
                        "ring": ring.to_string(),
                        "kind": kind,
                        "criterion": report.criterion,
                        "factors": factor_json,
                        "recomposition_ok": report.recomposition_ok,
                        "product_equals_intersection": report.product_equals_intersection,
                    }),
                    lines.join("\n"),
                )
            })(),
        },
        QuadCmd::Mul { d, left, right } => {
            quad_binop("quad mul", d, &left, &right, |a, b| a.mul(b), "*")
        }
        QuadCmd::Sum { d, left, right } => {
            quad_binop("quad sum", d, &left, &right, |a, b| a.sum(b), "+")
        }
        QuadCmd::Intersect { d, left, right } => {
            quad_binop("quad intersect", d, &left, &right, |a, b| a.intersect(b), "∩")
        }
        QuadCmd::Principal { d, ideal, bound } => Outcome {
            command: "quad principal",
            input: json!({ "d": d, "ideal": ideal.raw, "bound": bound }),
            body: (|| {
                let ring = QuadRing::new(d)?;
                let i = ideal_from_spec(ring, &ideal)?;
                let verdict = quad::is_principal(&i, bound)?;
                done(
                    json!({
                        "ring": ring.to_string(),
                        "ideal": quad_ideal_json(&i),
                        "verdict": principality_json(&verdict),
                    }),
                    format!("{i} in {ring} (norm {}): {}", i.norm(), principality_text(&verdict)),
                )
            })(),
        },
    }
}

// ---------------------------------------------------------------- lattice

fn law_json(v: &finite_lattice::LawVerdict) -> Value {
    match v.witness {
        Some(w) => json!({ "holds": v.holds, "witness": w }),
        None => json!({ "holds": v.holds }),
    }
}

fn lattice_summary(l: &FiniteLattice) -> idlat::Result<(Value, Vec<String>)> {
    let modular = l.is_modular()?;
    let distributive = l.is_distributive()?;
    let covers = l.covers();
    let mut lines = vec![
        format!("{} elements, bottom {}, top {}", l.size(), l.label(l.bottom()), l.label(l.top())),
        format!(
            "covering edges: {}",
            covers
                .iter()
                .map(|&(a, b)| format!("{} < {}", l.label(a), l.label(b)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        format!("modular: {}{}", yes_no(modular.holds), witness_text(l, &modular)),
        format!("distributive: {}{}", yes_no(distributive.holds), witness_text(l, &distributive)),
    ];
    if l.size() <= 8 {
        lines.push("meet/join tables:".to_string());
        for i in 0..l.size() {
            let row: Vec<String> = (0..l.size())
                .map(|j| format!("{}/{}", l.label(l.meet(i, j)), l.label(l.join(i, j))))
                .collect();
            lines.push(format!("  {}: {}", l.label(i), row.join("  ")));
        }
    }
    Ok((
        json!({
            "size": l.size(),
            "labels": l.labels(),
            "bottom": l.bottom(),
            "top": l.top(),
            "covers": covers,
            "modular": law_json(&modular),
            "distributive": law_json(&distributive),
        }),
        lines,
    ))
}

fn witness_text(l: &FiniteLattice, v: &finite_lattice::LawVerdict) -> String {
    match v.witness {
        Some([a, b, c]) => {
            format!(" (witness {}, {}, {})", l.label(a), l.label(b), l.label(c))
        }
        None => String::new(),
    }
}

fn run_lattice(cmd: LatticeCmd) -> Outcome {
    match cmd {
        LatticeCmd::PowersetIso { primes } => Outcome {
            command: "lattice powerset-iso",
            input: json!({ "primes": primes }),
            body: (|| {
                let m = finite_lattice::zn_powerset_iso(&primes)?;
                let verdict = finite_lattice::verify_isomorphism(&m);
                let n: i64 = primes.iter().product();
                let mut lines = vec![format!(
                    "P({{{}}}) vs I(Z/{n}Z): {} elements each",
                    join(&primes),
                    m.source.size()
                )];
                for (mask, &img) in m.map.iter().enumerate() {
                    lines.push(format!(
                        "  {:<12} -> {}",
                        m.source.label(mask),
                        m.target.label(img)
                    ));
                }
                lines.push(format!(
                    "order isomorphism: {}{}",
                    yes_no(verdict.holds),
                    match verdict.failure {
                        Some(f) => format!(" ({f:?})"),
                        None => String::new(),
                    }
                ));
                done(
                    json!({
                        "n": n,
                        "size": m.source.size(),
                        "map": m.map.iter().enumerate().map(|(mask, &img)| {
                            json!({
                                "subset": m.source.label(mask),
                                "ideal": m.target.label(img),
                            })
                        }).collect::<Vec<_>>(),
                        "isomorphic": verdict.holds,
                    }),
                    lines.join("\n"),
                )
            })(),
        },
        LatticeCmd::Check { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => usage_error(&format!("cannot read {}: {e}", file.display())),
            };
            let (labels, relations) = match parse::parse_order_file(&text) {
                Ok(parsed) => parsed,
                Err(e) => usage_error(&format!("{}: {e}", file.display())),
            };
            Outcome {
                command: "lattice check",
                input: json!({
                    "file": file.display().to_string(),
                    "elements": labels.len(),
                    "relations": relations.len(),
                }),
                body: (|| {
                    let l = FiniteLattice::from_order(labels, &relations)?;
                    let (result, lines) = lattice_summary(&l)?;
                    done(result, lines.join("\n"))
                })(),
            }
        }
    }
}

/// Report a malformed invocation (bad file, bad format) and exit with the
/// usage code, mirroring how clap reports argument errors.
fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

// ---------------------------------------------------------------- chains

fn verdict_json(v: &StationaryVerdict) -> Value {
    match v {
        StationaryVerdict::StationaryAt(i) => json!({ "stationary_at": i }),
        StationaryVerdict::NotStationaryWithin(b) => json!({ "not_stationary_within": b }),
    }
}

fn verdict_text(v: &StationaryVerdict) -> String {
    match v {
        StationaryVerdict::StationaryAt(i) => format!("stationary from index {i}"),
        StationaryVerdict::NotStationaryWithin(b) => {
            format!("not stationary within budget {b}")
        }
    }
}

fn run_chains(cmd: ChainsCmd) -> Outcome {
    match cmd {
        ChainsCmd::Radical { base, steps } => Outcome {
            command: "chains radical",
            input: json!({ "base": base, "steps": steps }),
            body: (|| {
                let chain = chains::radical_chain(base, steps)?;
                // The chain continues past what we materialized, so let the
                // detector look one element beyond the requested horizon.
                let verdict = chains::detect_stationary(
                    (1..=steps + 1).map(|k| chains::radical_chain_step(base, k))
                        .collect::<idlat::Result<Vec<_>>>()?,
                    |a, b| a.ideal_leq(b).expect("single base"),
                    |a, b| a == b,
                    steps as usize,
                )?;
                let shown: Vec<String> = chain.iter().map(|e| format!("({e})")).collect();
                done(
                    json!({
                        "elements": chain.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                        "verdict": verdict_json(&verdict),
                    }),
                    format!("{}\n{}", shown.join(" ⊂ "), verdict_text(&verdict)),
                )
            })(),
        },
        ChainsCmd::Detect { elements, budget } => Outcome {
            command: "chains detect",
            input: json!({
                "elements": elements.iter().map(|(b, q)| format!("{b}^{q}")).collect::<Vec<_>>(),
                "budget": budget,
            }),
            body: (|| {
                let chain = elements
                    .iter()
                    .map(|&(b, q)| RadicalChainElement::new(b, q))
                    .collect::<idlat::Result<Vec<_>>>()?;
                let budget = budget.unwrap_or(chain.len());
                let verdict = chains::detect_stationary_radical(&chain, budget)?;
                let shown: Vec<String> = chain.iter().map(|e| format!("({e})")).collect();
                done(
                    json!({
                        "budget": budget,
                        "verdict": verdict_json(&verdict),
                    }),
                    format!("{}\n{}", shown.join(" ⊆ "), verdict_text(&verdict)),
                )
            })(),
        },
    }
}

// ---------------------------------------------------------------- verify

fn run_verify() -> Outcome {
    let results = verify::run_all();
    let failed = results.iter().filter(|(_, r)| r.is_err()).count();
    let mut lines = Vec::new();
    let mut checks = Vec::new();
    for (name, r) in &results {
        match r {
            Ok(()) => {
                lines.push(format!("PASS  {name}"));
                checks.push(json!({ "name": name, "ok": true }));
            }
            Err(e) => {
                lines.push(format!("FAIL  {name}: {e}"));
                checks.push(json!({ "name": name, "ok": false, "error": e }));
            }
        }
    }
    lines.push(format!("{} checks: {} passed, {failed} failed", results.len(), results.len() - failed));
    Outcome {
        command: "verify-paper",
        input: json!({}),
        body: Ok(Body {
            result: json!({
                "checks": checks,
                "passed": results.len() - failed,
                "failed": failed,
            }),
            human: lines.join("\n"),
            ok: failed == 0,
        }),
    }
}

// ---------------------------------------------------------------- shared

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}
