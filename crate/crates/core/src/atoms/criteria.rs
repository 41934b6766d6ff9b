//! Membership tests for `A(y)` that avoid enumerating atoms.
//!
//! [`is_atom_inverse`] reads the one-line string of `w` and decides whether
//! `w⁻¹ ∈ A(y)`; the inverse is deliberate, since the conditions are phrased
//! in terms of where values appear. [`is_atom_local`] instead reduces to
//! involutions with at most two cycles by standardisation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::is_atom;
use crate::error::{Error, Result};
use crate::involution::{standardize, AffineInvolution};
use crate::perm::{residue, AffinePermutation};

/// Which condition of the string criterion failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clause {
    /// Fixed points must appear in increasing order.
    FixedOrder,
    /// For a cycle `(a, b)`, `b` must appear before `a`.
    CycleOrder,
    /// A fixed point may not appear between `b` and `a`.
    FixedInsideCycle,
    /// A fixed point below a cycle must appear before it.
    FixedBelowCycle,
    /// A fixed point above a cycle must appear after it.
    FixedAboveCycle,
    /// Two nested cycles appear in a forbidden arrangement.
    Nested,
    /// Two crossing or disjoint cycles appear in a forbidden arrangement.
    NonNested,
}

/// Result of the string criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriterionOutcome {
    /// All conditions hold.
    Member,
    /// The first failing condition with the values it involves.
    Violation { clause: Clause, values: Vec<i64> },
}

impl CriterionOutcome {
    /// Whether every condition holds.
    pub fn holds(&self) -> bool {
        matches!(self, CriterionOutcome::Member)
    }
}

enum Item {
    Fixed(i64),
    Cycle(i64, i64),
}

/// Decides `w⁻¹ ∈ A(y)` from the string `⋯ w(1) w(2) ⋯ w(n) ⋯` of `w`.
///
/// Writes `X ≺ Y` when `X` appears before `Y`. The conditions are: fixed
/// points appear in increasing order; `b ≺ a` for each cycle `(a, b)`; no
/// fixed point sits between `b` and `a`; a fixed point `X < a` satisfies
/// `X ≺ b`, and one with `b < X` satisfies `a ≺ X`; and two cycles
/// `a < a′` read `b a b′ a′` unless nested (`b′ < b`), in which case `b′ b a a′`
/// and `b′ a′ b a` are also allowed.
pub fn is_atom_inverse(w: &AffinePermutation, y: &AffineInvolution) -> Result<CriterionOutcome> {
    if w.n() != y.n() {
        return Err(Error::RankMismatch { left: w.n(), right: y.n() });
    }
    let n = w.n() as i64;
    let winv = w.inverse();
    let pos = |v: i64| winv.apply(v);
    let drift = (1..=n).map(|v| (pos(v) - v).abs()).max().unwrap_or(0);
    let span = (1..=n).map(|v| (y.apply(v) - v).abs()).max().unwrap_or(0);
    // Items farther apart than this appear in value order, which satisfies
    // every condition that could involve them.
    let reach = 2 * drift + 2 * span + 2 * n;
    let item_at = |v: i64| -> Option<Item> {
        let yv = y.apply(v);
        if yv == v {
            Some(Item::Fixed(v))
        } else if v < yv {
            Some(Item::Cycle(v, yv))
        } else {
            None
        }
    };
    let anchors: Vec<Item> = (1..=n).filter_map(item_at).collect();
    let others: Vec<Item> = (1 - reach - span..=n + reach + span).filter_map(item_at).collect();
    let before = |x: i64, y: i64| pos(x) < pos(y);
    let viol = |clause, values: Vec<i64>| Ok(CriterionOutcome::Violation { clause, values });

    for p in &anchors {
        if let Item::Cycle(a, b) = *p {
            if !before(b, a) {
                return viol(Clause::CycleOrder, vec![a, b]);
            }
        }
    }
    for p in &anchors {
        for q in &others {
            for (s, t) in [(p, q), (q, p)] {
                match (s, t) {
                    (&Item::Fixed(x), &Item::Fixed(x2)) => {
                        if x < x2 && !before(x, x2) {
                            return viol(Clause::FixedOrder, vec![x, x2]);
                        }
                    }
                    (&Item::Fixed(x), &Item::Cycle(a, b)) => {
                        if before(b, x) && before(x, a) {
                            return viol(Clause::FixedInsideCycle, vec![x, a, b]);
                        }
                        if x < a && !before(x, b) {
                            return viol(Clause::FixedBelowCycle, vec![x, a, b]);
                        }
                        if b < x && !before(a, x) {
                            return viol(Clause::FixedAboveCycle, vec![x, a, b]);
                        }
                    }
                    (&Item::Cycle(a, b), &Item::Cycle(a2, b2)) if a < a2 => {
                        if let Some(c) = two_cycle_clause(a, b, a2, b2, &pos) {
                            return viol(c, vec![a, b, a2, b2]);
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(CriterionOutcome::Member)
}

fn two_cycle_clause(a: i64, b: i64, a2: i64, b2: i64, pos: &impl Fn(i64) -> i64) -> Option<Clause> {
    let mut order = [a, b, a2, b2];
    order.sort_by_key(|&v| pos(v));
    if b2 < b {
        let ok = [[b, a, b2, a2], [b2, b, a, a2], [b2, a2, b, a]].contains(&order);
        (!ok).then_some(Clause::Nested)
    } else {
        (order != [b, a, b2, a2]).then_some(Clause::NonNested)
    }
}

/// Decides `w ∈ A(y)` by checking `[w]_E ∈ A([y]_E)` for every `y`-invariant
/// `E ⊆ {1, y(1), …, n, y(n)}` made of at most two `y`-orbits.
pub fn is_atom_local(w: &AffinePermutation, y: &AffineInvolution) -> Result<bool> {
    if w.n() != y.n() {
        return Err(Error::RankMismatch { left: w.n(), right: y.n() });
    }
    let n = w.n();
    let orbits: Vec<Vec<i64>> = {
        let set: BTreeSet<Vec<i64>> = (1..=n as i64)
            .map(|i| {
                let yi = y.apply(i);
                if yi == i {
                    vec![i]
                } else {
                    vec![i.min(yi), i.max(yi)]
                }
            })
            .collect();
        set.into_iter().collect()
    };
    let check = |e: Vec<i64>| -> Result<bool> {
        let we = standardize(w, &e)?;
        let ye = AffineInvolution::new(standardize(y.perm(), &e)?)?;
        Ok(is_atom(&we, &ye))
    };
    for (k, o) in orbits.iter().enumerate() {
        if !check(o.clone())? {
            return Ok(false);
        }
        for o2 in &orbits[k + 1..] {
            let mut e = o.clone();
            e.extend(o2);
            let distinct: BTreeSet<i64> = e.iter().map(|&v| residue(v, n)).collect();
            if distinct.len() == o.len() {
                continue;
            }
            if !check(e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
