//! Text input for permutations, involutions and weighted involutions.
//!
//! Accepted forms:
//!
//! * a window `[a1,…,an]` (commas or spaces), shifted windows included;
//! * a cycle list `(a,b)(c,d)`, optionally wrapped as `[cycles (a,b),(c,d)]`,
//!   with weights written `(a,b:w)`; `n` must be supplied separately;
//! * `id` for the identity, again with `n` supplied;
//! * a JSON record `{"n":…,"window":[…]}` or `{"n":…,"cycles":[[a,b],…]}`,
//!   where cycles may carry a third weight entry.

use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::perm::AffinePermutation;
use crate::weighted::WeightedInvolution;

/// A parsed cycle `(a, b)` with an optional weight.
pub type WeightedCycle = (i64, i64, Option<u64>);

/// Syntactic form of an input string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Notation {
    Window(Vec<i64>),
    Cycles(Vec<WeightedCycle>),
    Identity,
    Json(serde_json::Value),
}

fn parse_int<T: std::str::FromStr>(tok: &str, what: &str) -> Result<T> {
    tok.trim().parse().map_err(|_| Error::Parse(format!("bad {what} {tok:?}")))
}

/// Classifies and tokenises `s` without interpreting it.
pub fn parse_notation(s: &str) -> Result<Notation> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map(Notation::Json).map_err(|e| Error::Parse(e.to_string()));
    }
    if s.eq_ignore_ascii_case("id") || s.eq_ignore_ascii_case("identity") {
        return Ok(Notation::Identity);
    }
    if s.contains('(') {
        let mut body = s;
        if let Some(inner) = body.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            body = inner.trim();
        }
        body = body.strip_prefix("cycles").unwrap_or(body);
        let mut cycles = Vec::new();
        let mut rest = body;
        loop {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let inner = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let close = inner.find(')').ok_or_else(|| Error::Parse("unclosed '('".into()))?;
            let group = &inner[..close];
            rest = &inner[close + 1..];
            let (pair, weight) = match group.split_once(':') {
                Some((p, w)) => (p, Some(parse_int::<u64>(w, "weight")?)),
                None => (group, None),
            };
            let nums: Vec<&str> = pair.split([',', ' ']).filter(|t| !t.is_empty()).collect();
            let [a, b] = nums[..] else {
                return Err(Error::Parse(format!("cycle ({group}) needs two entries")));
            };
            cycles.push((parse_int(a, "cycle entry")?, parse_int(b, "cycle entry")?, weight));
        }
        return Ok(Notation::Cycles(cycles));
    }
    let body = s
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected a window, cycle list or JSON record, got {s:?}")))?;
    let window = body
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| parse_int(t, "window entry"))
        .collect::<Result<Vec<i64>>>()?;
    Ok(Notation::Window(window))
}

fn rank(given: Option<usize>, found: Option<usize>) -> Result<usize> {
    match (given, found) {
        (Some(a), Some(b)) if a != b => Err(Error::RankMismatch { left: a, right: b }),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(Error::Parse("this notation needs an explicit n".into())),
    }
}

fn from_json<T: serde::de::DeserializeOwned>(v: serde_json::Value, n: Option<usize>) -> Result<T> {
    let found = v.get("n").and_then(|x| x.as_u64()).map(|x| x as usize);
    rank(n, found)?;
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a permutation from a window, `id` or a JSON window record.
pub fn parse_permutation(s: &str, n: Option<usize>) -> Result<AffinePermutation> {
    match parse_notation(s)? {
        Notation::Window(w) => {
            let n = rank(n, Some(w.len()))?;
            AffinePermutation::from_window(n, &w)
        }
        Notation::Identity => Ok(AffinePermutation::identity(rank(n, None)?)),
        Notation::Json(v) => from_json(v, n),
        Notation::Cycles(_) => Err(Error::Parse("expected a window, not a cycle list".into())),
    }
}

/// Parses an involution; cycle weights, if present, are rejected.
pub fn parse_involution(s: &str, n: Option<usize>) -> Result<AffineInvolution> {
    match parse_notation(s)? {
        Notation::Cycles(cs) => {
            if cs.iter().any(|c| c.2.is_some()) {
                return Err(Error::Parse("weights are not allowed here".into()));
            }
            let pairs: Vec<(i64, i64)> = cs.iter().map(|&(a, b, _)| (a, b)).collect();
            AffineInvolution::from_cycles(rank(n, None)?, &pairs)
        }
        Notation::Json(v) => from_json(v, n),
        _ => AffineInvolution::new(parse_permutation(s, n)?),
    }
}

/// Parses a weighted involution; unweighted input gets weight zero.
pub fn parse_weighted(s: &str, n: Option<usize>) -> Result<WeightedInvolution> {
    match parse_notation(s)? {
        Notation::Cycles(cs) => {
            let n = rank(n, None)?;
            let pairs: Vec<(i64, i64)> = cs.iter().map(|&(a, b, _)| (a, b)).collect();
            let z = AffineInvolution::from_cycles(n, &pairs)?;
            let weights: Vec<(i64, i64, u64)> = cs.iter().map(|&(a, b, w)| (a, b, w.unwrap_or(0))).collect();
            WeightedInvolution::new(z, &weights)
        }
        Notation::Json(v) => from_json(v, n),
        _ => Ok(WeightedInvolution::unweighted(parse_involution(s, n)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_and_cycles_agree() {
        let a = parse_involution("[-4,2,3,9]", None).unwrap();
        let b = parse_involution("(0,5)", Some(4)).unwrap();
        let c = parse_involution(r#"{"n":4,"cycles":[[4,9]]}"#, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn bracketed_cycle_list() {
        let z = parse_involution("[cycles (1,12),(2,11),(3,4)]", Some(6)).unwrap();
        assert_eq!(z.canonical_cycles(), vec![(1, 12), (2, 11), (3, 4)]);
    }

    #[test]
    fn weights() {
        let t = parse_weighted("(1,8:4)(2,7)", Some(4)).unwrap();
        assert_eq!(t.weight(), 4);
        assert!(parse_involution("(1,8:4)", Some(4)).is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_involution("(1,5)", None), Err(Error::Parse(_))));
        assert!(matches!(parse_involution("[2,1]", Some(3)), Err(Error::RankMismatch { .. })));
        assert!(parse_notation("1,2").is_err());
        assert!(parse_notation("(1,2").is_err());
    }
}
