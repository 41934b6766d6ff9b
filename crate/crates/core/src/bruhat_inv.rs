//! Bruhat covers between affine involutions.
//!
//! Covers are produced by the transformations `τ_ij`, which act on `y`
//! according to the arrangement of `i`, `j`, `y(i)` and `y(j)`. That
//! arrangement is encoded as a short word: list the distinct vertices in
//! increasing order and write, for each, the letter naming the position of
//! its image under `y` (`a` for the first, `b` for the second, …). The letter
//! is uppercase when the vertex is `i` or `j` and lowercase otherwise. For
//! example `y(i) < j = y(j) < i` encodes as `cBA`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atoms::{alpha_min, atom_poset, demazure_square, is_atom_inverse};
use crate::error::{Error, Result};
use crate::involution::{involutions_by_hat, AffineInvolution};
use crate::perm::AffinePermutation;

/// The arrangement of `{i, j, y(i), y(j)}`, e.g. `"BadC"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern(pub String);

impl Pattern {
    /// Number of distinct vertices.
    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// The code as a string slice.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for Pattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// The pattern of `y` at `(i, j)`.
pub fn pattern(y: &AffineInvolution, i: i64, j: i64) -> Result<Pattern> {
    check_pair(y, i, j)?;
    let mut verts = vec![i, j, y.apply(i), y.apply(j)];
    verts.sort();
    verts.dedup();
    let code = verts
        .iter()
        .map(|&v| {
            let k = verts.binary_search(&y.apply(v)).expect("vertex set is y-stable");
            let c = (b'a' + k as u8) as char;
            if v == i || v == j {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect();
    Ok(Pattern(code))
}

fn check_pair(y: &AffineInvolution, i: i64, j: i64) -> Result<()> {
    if (i - j).rem_euclid(y.n() as i64) == 0 {
        return Err(Error::InvalidReflection { n: y.n(), i, j });
    }
    Ok(())
}

fn refl(n: usize, a: i64, b: i64) -> Result<AffinePermutation> {
    if a == b {
        Ok(AffinePermutation::identity(n))
    } else {
        AffinePermutation::reflection(n, a, b)
    }
}

fn congruent(a: i64, b: i64, n: usize) -> bool {
    (a - b).rem_euclid(n as i64) == 0
}

/// `ȳ`: `y` with the cycles through `i` and `j` removed.
fn y_bar(y: &AffineInvolution, i: i64, j: i64) -> Result<AffinePermutation> {
    let n = y.n();
    let mut p = y.perm().compose(&refl(n, i, y.apply(i))?)?;
    if !congruent(i, y.apply(j), n) {
        p = p.compose(&refl(n, j, y.apply(j))?)?;
    }
    Ok(p)
}

/// The transformation `τ_ij(y)` for `i < j`, `i ≢ j (mod n)`.
pub fn tau(y: &AffineInvolution, i: i64, j: i64) -> Result<AffineInvolution> {
    if i >= j {
        return Err(Error::Domain(format!("τ needs i < j, got ({i},{j})")));
    }
    let n = y.n();
    let pat = pattern(y, i, j)?;
    let (yi, yj) = (y.apply(i), y.apply(j));
    let eq = congruent(i, yj, n);
    let conj = |t: AffinePermutation| -> Result<AffineInvolution> { y.conjugate_by(&t) };
    let left =
        |t: AffinePermutation| -> Result<AffineInvolution> { AffineInvolution::new(t.compose(&y_bar(y, i, j)?)?) };
    match pat.as_str() {
        "ACb" | "bAC" | "bADc" | "CDab" | "cdAB" => conj(refl(n, i, j)?),
        "AcB" => conj(refl(n, i, yj)?),
        "BaC" => conj(refl(n, yi, j)?),
        "CdaB" if !eq => conj(refl(n, i, yj)?),
        "CdaB" | "BadC" => left(refl(n, i, j)?),
        "BaDc" => left(refl(n, i, yj)?),
        "bAdC" => left(refl(n, yi, j)?),
        "AB" => AffineInvolution::new(refl(n, i, j)?.compose(y.perm())?),
        _ => Ok(y.clone()),
    }
}

/// Whether `ℓ̂(τ_ij(y)) = ℓ̂(y) + 1`, decided without computing lengths of
/// `τ_ij(y)`. Assumes `τ_ij(y) ≠ y`.
///
/// With `Δ = j − i` the tests are:
/// * if `y(i) ≤ i` or `j ≤ y(j)`: when `i ≢ y(j)`, whether `ℓ(y t_ij) = ℓ(y) + 1`;
///   otherwise whether no `i < e < j` has `y(i) − Δ < y(e) < y(j) + Δ`;
/// * if `i < y(i) < y(j) < j ≡ y(i)`: whether `y(j) = i + n` and no `e` has
///   `j − n < e < i + n`, `i < y(e) < j`, or `i < e < j − n`, `i − n < y(e) < j`;
/// * if `i < y(j) < y(i) < j ≡ y(i)`: whether `y(j) = i + n` and no `e` has
///   `j − 2n < e < i + n`, `i − n < y(e) < j`, or `i < e < j − 2n`, `i − 2n < y(e) < j`.
///
/// Any other configuration is a domain error.
pub fn hat_increment_ok(y: &AffineInvolution, i: i64, j: i64) -> Result<bool> {
    let hyp = increment_hypothesis(y, i, j)?
        .ok_or_else(|| Error::Domain(format!("no increment test applies to {y} at ({i},{j})")))?;
    let n = y.n();
    let ni = n as i64;
    let (yi, yj) = (y.apply(i), y.apply(j));
    let none_in = |lo: i64, hi: i64, vlo: i64, vhi: i64| {
        (lo + 1..hi).all(|e| {
            let ye = y.apply(e);
            !(vlo < ye && ye < vhi)
        })
    };
    Ok(match hyp {
        Hypothesis::Outer if !congruent(i, yj, n) => {
            let t = AffinePermutation::reflection(n, i, j)?;
            y.perm().compose(&t)?.length() == y.length() + 1
        }
        Hypothesis::Outer => {
            let d = j - i;
            none_in(i, j, yi - d, yj + d)
        }
        Hypothesis::Increasing => yj == i + ni && none_in(j - ni, i + ni, i, j) && none_in(i, j - ni, i - ni, j),
        Hypothesis::Crossing => {
            yj == i + ni && none_in(j - 2 * ni, i + ni, i - ni, j) && none_in(i, j - 2 * ni, i - 2 * ni, j)
        }
    })
}

/// Which configuration of `(i, j)` relative to `y` an increment test covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    /// `y(i) ≤ i` or `j ≤ y(j)`.
    Outer,
    /// `i < y(i) < y(j) < j ≡ y(i)`.
    Increasing,
    /// `i < y(j) < y(i) < j ≡ y(i)`.
    Crossing,
}

/// The hypothesis under which [`hat_increment_ok`] decides `(i, j)`, if any.
pub fn increment_hypothesis(y: &AffineInvolution, i: i64, j: i64) -> Result<Option<Hypothesis>> {
    check_pair(y, i, j)?;
    if i >= j {
        return Err(Error::Domain(format!("needs i < j, got ({i},{j})")));
    }
    let (yi, yj) = (y.apply(i), y.apply(j));
    let jy = congruent(j, yi, y.n());
    Ok(if yi <= i || j <= yj {
        Some(Hypothesis::Outer)
    } else if i < yi && yi < yj && yj < j && jy {
        Some(Hypothesis::Increasing)
    } else if i < yj && yj < yi && yi < j && jy {
        Some(Hypothesis::Crossing)
    } else {
        None
    })
}

/// An upper cover `y ⋖ z` with one witnessing pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionCover {
    pub z: AffineInvolution,
    pub i: i64,
    pub j: i64,
    pub pattern: Pattern,
    pub hypothesis: Hypothesis,
}

/// Upper bound on `j − i` scanned by [`covers_up_inv`].
pub fn cover_window(y: &AffineInvolution) -> i64 {
    y.n() as i64 * (y.hat_length() as i64 + 3)
}

/// Upper Bruhat covers of `y` among involutions, built from `τ_ij` and
/// [`hat_increment_ok`], sorted by `z`.
pub fn covers_up_inv(y: &AffineInvolution) -> Vec<InvolutionCover> {
    covers_up_inv_within(y, cover_window(y))
}

/// [`covers_up_inv`] with an explicit bound on `j − i`.
pub fn covers_up_inv_within(y: &AffineInvolution, reach: i64) -> Vec<InvolutionCover> {
    let ni = y.n() as i64;
    let mut found: BTreeMap<AffineInvolution, InvolutionCover> = BTreeMap::new();
    if y.n() < 2 {
        return Vec::new();
    }
    for i in 1..=ni {
        for j in i + 1..=i + reach {
            if (j - i) % ni == 0 {
                continue;
            }
            let z = tau(y, i, j).expect("valid pair");
            if &z == y || found.contains_key(&z) {
                continue;
            }
            if let Ok(true) = hat_increment_ok(y, i, j) {
                let pattern = pattern(y, i, j).expect("valid pair");
                let hypothesis = increment_hypothesis(y, i, j).ok().flatten().expect("decided above");
                found.insert(z.clone(), InvolutionCover { z, i, j, pattern, hypothesis });
            }
        }
    }
    found.into_values().collect()
}

/// Upper covers by definition: `z` with `ℓ̂(z) = ℓ̂(y) + 1` and `y ≤ z`.
pub fn covers_up_inv_bruteforce(y: &AffineInvolution, next_layer: &[AffineInvolution]) -> Vec<AffineInvolution> {
    let h = y.hat_length();
    let mut out: Vec<AffineInvolution> = next_layer
        .iter()
        .filter(|z| z.hat_length() == h + 1 && y.perm().bruhat_leq(z.perm()).unwrap_or(false))
        .cloned()
        .collect();
    out.sort();
    out
}

/// Bruhat order between involutions.
pub fn bruhat_leq_inv(y: &AffineInvolution, z: &AffineInvolution) -> Result<bool> {
    y.perm().bruhat_leq(z.perm())
}

/// Bruhat order through atoms: some atom of `y` lies below `α_min(z)`.
pub fn bruhat_leq_inv_by_atoms(y: &AffineInvolution, z: &AffineInvolution) -> Result<bool> {
    let w = alpha_min(z);
    for v in atom_poset(y)?.atoms {
        if v.bruhat_leq(&w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// A failure of the covering property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringViolation {
    pub y: AffineInvolution,
    pub i: i64,
    pub j: i64,
    /// Involutions `z` with some `w·t_ij ∈ A(z)`, `w ∈ A(y)`.
    pub targets: Vec<AffineInvolution>,
    /// `τ_ij(y)`.
    pub expected: AffineInvolution,
}

/// Summary of a covering-property sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub involutions: usize,
    pub pairs_with_targets: usize,
    pub violations: Vec<CoveringViolation>,
}

/// Checks the covering property at `y`: for each `t_ij`, every
/// `w ∈ A(y)` with `w ⋖ w t_ij ∈ A(z)` has the same `z`, namely `τ_ij(y)`.
/// Membership of `w t_ij` is decided by the string criterion on its inverse.
pub fn covering_property_at(y: &AffineInvolution) -> Result<(usize, Vec<CoveringViolation>)> {
    let n = y.n();
    let ni = n as i64;
    let atoms = atom_poset(y)?.atoms;
    let reach = cover_window(y);
    let mut pairs = 0;
    let mut bad = Vec::new();
    for i in 1..=ni {
        for j in i + 1..=i + reach {
            if (j - i) % ni == 0 {
                continue;
            }
            let t = AffinePermutation::reflection(n, i, j)?;
            let mut targets = Vec::new();
            for w in &atoms {
                let wt = w.compose(&t)?;
                if wt.length() != w.length() + 1 {
                    continue;
                }
                let z = demazure_square(&wt);
                let by_criterion = is_atom_inverse(&wt.inverse(), &z)?.holds();
                if by_criterion != (z.hat_length() == wt.length()) {
                    return Err(Error::Domain(format!("string criterion disagrees with lengths at {wt}")));
                }
                if by_criterion {
                    targets.push(z);
                }
            }
            targets.sort();
            targets.dedup();
            if targets.is_empty() {
                continue;
            }
            pairs += 1;
            let expected = tau(y, i, j)?;
            if targets.len() != 1 || targets[0] != expected {
                bad.push(CoveringViolation { y: y.clone(), i, j, targets, expected });
            }
        }
    }
    Ok((pairs, bad))
}

/// Runs [`covering_property_at`] for every involution of rank `n` with
/// `ℓ̂ ≤ max_hat`, in parallel.
pub fn covering_property_check(n: usize, max_hat: u64) -> Result<CoveringReport> {
    let ys: Vec<AffineInvolution> = involutions_by_hat(n, max_hat).into_values().flatten().collect();
    let results: Vec<Result<(usize, Vec<CoveringViolation>)>> = ys.par_iter().map(covering_property_at).collect();
    let mut report = CoveringReport { involutions: ys.len(), ..Default::default() };
    for r in results {
        let (p, v) = r?;
        report.pairs_with_targets += p;
        report.violations.extend(v);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(n: usize, c: &[(i64, i64)]) -> AffineInvolution {
        AffineInvolution::from_cycles(n, c).unwrap()
    }

    #[test]
    fn pattern_codes() {
        // y(i) < j = y(j) < i, read with the lower white vertex first.
        let y = inv(7, &[(1, 3)]);
        assert_eq!(pattern(&y, 1, 4).unwrap().as_str(), "BaC");
        let y = inv(9, &[(1, 4)]);
        // i < z(j) < j < z(i): vertices i=1, z(j)=2, j=3, z(i)=4.
        let y2 = inv(9, &[(1, 4), (2, 3)]);
        assert_eq!(pattern(&y2, 1, 3).unwrap().as_str(), "DcBa");
        assert_eq!(pattern(&y, 2, 3).unwrap().as_str(), "AB");
    }

    #[test]
    fn tau_examples() {
        let y = inv(7, &[(1, 3), (5, 7)]);
        assert_eq!(tau(&y, 1, 4).unwrap(), inv(7, &[(1, 4), (5, 7)]));
        assert_eq!(pattern(&y, 1, 14).unwrap().as_str(), "BadC");
        assert_eq!(tau(&y, 1, 14).unwrap(), inv(7, &[(1, 14)]));
    }
}
