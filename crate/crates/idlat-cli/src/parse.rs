//! Command-line grammars for ideals and chain elements.
//!
//! Quadratic integers are written `x+y*w` where `w` is the ring's module
//! generator (√d or (1+√d)/2 depending on d); the `*` is optional and terms
//! may come in any order, so `4+w`, `w+4`, `-w`, and `3` all parse. An ideal
//! is a comma-separated list of generators, optionally prefixed `d=<D>:` to
//! construct it in a different ring than the command's.

use idlat::chains::Exponent;

/// A parsed ideal argument: generator coordinates plus an optional ring
/// override. Coordinates stay raw here; the ring is only known at dispatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    pub d_override: Option<i64>,
    pub gens: Vec<(i64, i64)>,
    /// The argument as typed, echoed back in output.
    pub raw: String,
}

pub fn parse_quad_int(s: &str) -> Result<(i64, i64), String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact.is_empty() {
        return Err("empty generator".into());
    }
    let (mut x, mut y) = (0i64, 0i64);
    let mut term = String::new();
    // Split at +/- boundaries, keeping the sign with its term.
    for (i, c) in compact.chars().enumerate() {
        if (c == '+' || c == '-') && i > 0 {
            add_term(&term, &mut x, &mut y)?;
            term.clear();
        }
        term.push(c);
    }
    add_term(&term, &mut x, &mut y)?;
    Ok((x, y))
}

fn add_term(term: &str, x: &mut i64, y: &mut i64) -> Result<(), String> {
    let err = || format!("bad term {term:?}: expected an integer, w, or <int>w");
    let (body, is_omega) = match term.strip_suffix(['w', 'W']) {
        Some(rest) => (rest, true),
        None => (term, false),
    };
    let coeff = match body {
        "" | "+" if is_omega => 1,
        "-" if is_omega => -1,
        _ => body.parse::<i64>().map_err(|_| err())?,
    };
    let slot = if is_omega { y } else { x };
    *slot = slot.checked_add(coeff).ok_or_else(|| format!("term {term:?} overflows"))?;
    Ok(())
}

pub fn parse_ideal_spec(s: &str) -> Result<IdealSpec, String> {
    let raw = s.to_string();
    let (d_override, rest) = match s.split_once(':') {
        Some((head, rest)) => {
            let head = head.trim();
            let d = head
                .strip_prefix("d=")
                .and_then(|v| v.parse::<i64>().ok())
                .ok_or_else(|| format!("bad ring prefix {head:?}: expected d=<integer>:"))?;
            (Some(d), rest)
        }
        None => (None, s),
    };
    let gens = rest
        .split(',')
        .map(parse_quad_int)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealSpec { d_override, gens, raw })
}

/// `<generator>/<modulus>` for an ideal of Z/nZ, e.g. `2/6`.
pub fn parse_zn_elem(s: &str) -> Result<(i64, i64), String> {
    let (g, n) = s.split_once('/').ok_or_else(|| format!("bad element {s:?}: expected g/n"))?;
    let g = g.trim().parse::<i64>().map_err(|_| format!("bad generator {g:?}"))?;
    let n = n.trim().parse::<i64>().map_err(|_| format!("bad modulus {n:?}"))?;
    Ok((g, n))
}

/// `<base>^<s>/<t>` (or `<base>^<s>`) for a radical chain element, e.g. `5^1/2`.
pub fn parse_radical_elem(s: &str) -> Result<(i64, Exponent), String> {
    let (base, exp) =
        s.split_once('^').ok_or_else(|| format!("bad element {s:?}: expected b^s/t"))?;
    let base = base.trim().parse::<i64>().map_err(|_| format!("bad base {base:?}"))?;
    let (num, den) = match exp.split_once('/') {
        Some((num, den)) => {
            let den = den.trim().parse::<i128>().map_err(|_| format!("bad denominator {den:?}"))?;
            (num, den)
        }
        None => (exp, 1),
    };
    let num = num.trim().parse::<i128>().map_err(|_| format!("bad numerator {num:?}"))?;
    if den == 0 {
        return Err("zero denominator".into());
    }
    Ok((base, Exponent::new(num, den)))
}

/// The `lattice check` input format: element count, that many labels, then
/// `i <= j` relation lines; a blank line or EOF ends the description.
pub fn parse_order_file(text: &str) -> Result<(Vec<String>, Vec<(usize, usize)>), String> {
    let mut lines = text.lines();
    let count_line = lines.next().ok_or("empty input")?;
    let k: usize = count_line
        .trim()
        .parse()
        .map_err(|_| format!("bad element count {:?}", count_line.trim()))?;
    let mut labels = Vec::with_capacity(k);
    for i in 0..k {
        let label = lines.next().ok_or_else(|| format!("expected {k} labels, got {i}"))?;
        labels.push(label.trim().to_string());
    }
    let mut relations = Vec::new();
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            break;
        }
        let (i, j) = line
            .split_once("<=")
            .ok_or_else(|| format!("bad relation line {line:?}: expected i <= j"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v < k)
                .ok_or_else(|| format!("bad element index {:?} (have {k} elements)", t.trim()))
        };
        relations.push((parse(i)?, parse(j)?));
    }
    Ok((labels, relations))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_int_forms() {
        assert_eq!(parse_quad_int("3"), Ok((3, 0)));
        assert_eq!(parse_quad_int("4+1*w"), Ok((4, 1)));
        assert_eq!(parse_quad_int("4+w"), Ok((4, 1)));
        assert_eq!(parse_quad_int("w"), Ok((0, 1)));
        assert_eq!(parse_quad_int("-w"), Ok((0, -1)));
        assert_eq!(parse_quad_int("4-5w"), Ok((4, -5)));
        assert_eq!(parse_quad_int(" w + 4 "), Ok((4, 1)));
        assert_eq!(parse_quad_int("-2+3*W"), Ok((-2, 3)));
        assert_eq!(parse_quad_int("1+1+w"), Ok((2, 1)));
        assert!(parse_quad_int("").is_err());
        assert!(parse_quad_int("x").is_err());
        assert!(parse_quad_int("2w+3w4").is_err());
    }

    #[test]
    fn ideal_specs() {
        let spec = parse_ideal_spec("3,4+w").unwrap();
        assert_eq!(spec.d_override, None);
        assert_eq!(spec.gens, vec![(3, 0), (4, 1)]);
        let spec = parse_ideal_spec("d=-7:2,1+w").unwrap();
        assert_eq!(spec.d_override, Some(-7));
        assert_eq!(spec.gens, vec![(2, 0), (1, 1)]);
        assert!(parse_ideal_spec("q=2:3").is_err());
        assert!(parse_ideal_spec("3,,4").is_err());
    }

    #[test]
    fn chain_elements() {
        assert_eq!(parse_zn_elem("2/6"), Ok((2, 6)));
        assert!(parse_zn_elem("26").is_err());
        let (b, q) = parse_radical_elem("5^1/2").unwrap();
        assert_eq!((b, q), (5, Exponent::new(1, 2)));
        let (b, q) = parse_radical_elem("7^3").unwrap();
        assert_eq!((b, q), (7, Exponent::from_integer(3)));
        assert!(parse_radical_elem("5^1/0").is_err());
        assert!(parse_radical_elem("5").is_err());
    }

    #[test]
    fn order_files() {
        let (labels, rel) = parse_order_file("2\nbot\ntop\n0 <= 1\n\nignored").unwrap();
        assert_eq!(labels, ["bot", "top"]);
        assert_eq!(rel, [(0, 1)]);
        assert!(parse_order_file("2\na\n").is_err());
        assert!(parse_order_file("1\na\n0 <= 5\n").is_err());
    }
}
