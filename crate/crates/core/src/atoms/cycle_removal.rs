//! Recovering `y` from the string of an inverse atom by deleting cycles.
//!
//! While the string has a consecutive pair `b a` with `a < b`, record
//! `(a, b)` and delete every value congruent to `a` or `b`. The recorded
//! pairs are the cycles of `y` and what survives is its fixed points, in
//! increasing order, whichever pair is chosen at each step.

use serde::{Deserialize, Serialize};

use super::demazure_square;
use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::perm::{residue, AffinePermutation};

/// Outcome of cycle removal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRemoval {
    /// Removed pairs `(a, b)` in removal order, translated so `a ∈ [n]`.
    pub pairs: Vec<(i64, i64)>,
    /// One period of the surviving string.
    pub fixed: Vec<i64>,
}

impl CycleRemoval {
    /// The involution with the recorded cycles.
    pub fn involution(&self, n: usize) -> Result<AffineInvolution> {
        AffineInvolution::from_cycles(n, &self.pairs)
    }

    /// Pairs sorted, for comparisons that ignore removal order.
    pub fn sorted_pairs(&self) -> Vec<(i64, i64)> {
        let mut p = self.pairs.clone();
        p.sort();
        p
    }
}

/// Cycle removal choosing the pair whose larger entry is leftmost in `[n]`.
pub fn cycle_removal(w: &AffinePermutation) -> Result<CycleRemoval> {
    cycle_removal_with(w, |_| 0)
}

/// Cycle removal with a caller-supplied choice among the available pairs.
///
/// `choose` receives the number of candidate pairs (at least one) and
/// returns the index of the one to remove. Requires `w⁻¹` to be an atom.
pub fn cycle_removal_with(w: &AffinePermutation, mut choose: impl FnMut(usize) -> usize) -> Result<CycleRemoval> {
    let n = w.n();
    let ni = n as i64;
    let y = demazure_square(&w.inverse());
    if w.length() != y.hat_length() {
        return Err(Error::Domain(format!("{w} is not the inverse of an atom")));
    }
    let mut alive: Vec<i64> = (1..=ni).collect();
    let mut pairs = Vec::new();
    loop {
        let k = alive.len();
        let cands: Vec<(i64, i64)> = (0..k)
            .filter_map(|t| {
                let p = alive[t];
                let q = if t + 1 < k { alive[t + 1] } else { alive[0] + ni };
                let (b, a) = (w.apply(p), w.apply(q));
                (a < b && k > 1).then_some((a, b))
            })
            .collect();
        if cands.is_empty() {
            break;
        }
        let pick = choose(cands.len()).min(cands.len() - 1);
        let (a, b) = cands[pick];
        let (ra, rb) = (residue(a, n), residue(b, n));
        alive.retain(|&p| {
            let r = residue(w.apply(p), n);
            r != ra && r != rb
        });
        pairs.push((ra, b + (ra - a)));
    }
    let fixed = alive.iter().map(|&p| w.apply(p)).collect();
    Ok(CycleRemoval { pairs, fixed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycle_example() {
        let w = AffinePermutation::from_window(4, &[3, 4, -3, -2]).unwrap();
        let got = cycle_removal(&w).unwrap();
        assert_eq!(got.sorted_pairs(), vec![(1, 8), (2, 7)]);
        assert!(got.fixed.is_empty());
        let y = AffineInvolution::from_cycles(4, &[(1, 8), (2, 7)]).unwrap();
        assert_eq!(got.involution(4).unwrap(), y);
    }
}
