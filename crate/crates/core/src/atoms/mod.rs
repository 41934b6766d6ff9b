//! Atoms of affine involutions and the partial order they carry.
//!
//! An atom of `z` is a shortest `w` with `w⁻¹ ∘ w = z`; all have length
//! `ℓ̂(z)`. Atoms form a graded poset under `⋖_A`, with bottom `α_min(z)` and
//! top `α_max(z)`.

mod criteria;
mod cycle_removal;
mod poset;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::perm::{div_ceil, AffinePermutation};

pub use criteria::{is_atom_inverse, is_atom_local, Clause, CriterionOutcome};
pub use cycle_removal::{cycle_removal, cycle_removal_with, CycleRemoval};
pub use poset::{atom_poset, AtomPoset, PosetRecord};

/// `w⁻¹ ∘ w`, the involution an element maps to under the Demazure square.
pub fn demazure_square(w: &AffinePermutation) -> AffineInvolution {
    let z = w.inverse().demazure(w).expect("same rank");
    AffineInvolution::new(z).expect("Demazure square is an involution")
}

/// Direct membership test `w ∈ A(z)`.
pub fn is_atom(w: &AffinePermutation, z: &AffineInvolution) -> bool {
    w.n() == z.n() && w.length() == z.hat_length() && &demazure_square(w) == z
}

/// `α_min(z) = [b_1, a_1, …, b_l, a_l]⁻¹` over `a_i ∈ [n]` with `a_i ≤ z(a_i) = b_i`.
pub fn alpha_min(z: &AffineInvolution) -> AffinePermutation {
    let mut seq = Vec::new();
    for a in 1..=z.n() as i64 {
        let b = z.apply(a);
        if a <= b {
            seq.extend([b, a]);
        }
    }
    AffinePermutation::from_window(z.n(), &seq).expect("covers every residue").inverse()
}

/// `α_max(z) = [d_1, c_1, …, d_l, c_l]⁻¹` over `d_i ∈ [n]` with `c_i = z(d_i) ≤ d_i`.
pub fn alpha_max(z: &AffineInvolution) -> AffinePermutation {
    let mut seq = Vec::new();
    for d in 1..=z.n() as i64 {
        let c = z.apply(d);
        if c <= d {
            seq.extend([d, c]);
        }
    }
    AffinePermutation::from_window(z.n(), &seq).expect("covers every residue").inverse()
}

/// Elements of rank `n` grouped by length, up to `max_len`.
///
/// Fails with [`Error::ResourceLimit`] once more than `limit` elements are held.
pub fn elements_by_length(n: usize, max_len: u64, limit: usize) -> Result<Vec<Vec<AffinePermutation>>> {
    let mut layers = vec![vec![AffinePermutation::identity(n)]];
    if n < 2 {
        return Ok(layers);
    }
    let mut total = 1usize;
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for x in layers.last().unwrap() {
            for i in 1..=n as i64 {
                if !x.has_right_descent(i) {
                    next.insert(x.mul_simple_right(i));
                }
            }
        }
        total += next.len();
        if total > limit {
            return Err(Error::ResourceLimit { what: format!("elements of length ≤ {max_len} for n = {n}"), limit });
        }
        layers.push(next.into_iter().collect());
    }
    Ok(layers)
}

/// Default cap on brute-force searches.
pub const BRUTE_FORCE_LIMIT: usize = 2_000_000;

/// `A(z)` by scanning every element of length `ℓ̂(z)`.
pub fn atoms_bruteforce(z: &AffineInvolution) -> Result<Vec<AffinePermutation>> {
    let h = z.hat_length();
    let layers = elements_by_length(z.n(), h, BRUTE_FORCE_LIMIT)?;
    Ok(layers[h as usize].iter().filter(|w| &demazure_square(w) == z).cloned().collect())
}

/// Every atom of length at most `max_len`, grouped by its involution.
pub fn atoms_table_bruteforce(n: usize, max_len: u64) -> Result<BTreeMap<AffineInvolution, Vec<AffinePermutation>>> {
    let mut out: BTreeMap<AffineInvolution, Vec<AffinePermutation>> = BTreeMap::new();
    for (k, layer) in elements_by_length(n, max_len, BRUTE_FORCE_LIMIT)?.into_iter().enumerate() {
        for w in layer {
            let z = demazure_square(&w);
            if z.hat_length() == k as u64 {
                out.entry(z).or_default().push(w);
            }
        }
    }
    Ok(out)
}

/// `A(z)` by peeling a descent: every atom is `v·s_i` for an atom `v` of the
/// involution one step below `z` along `s_i`.
pub fn atoms_recursive(z: &AffineInvolution) -> Vec<AffinePermutation> {
    fn go(
        z: &AffineInvolution,
        memo: &mut HashMap<AffineInvolution, Vec<AffinePermutation>>,
    ) -> Vec<AffinePermutation> {
        if let Some(v) = memo.get(z) {
            return v.clone();
        }
        let n = z.n() as i64;
        let mut out = BTreeSet::new();
        if z.perm().is_identity() {
            out.insert(z.perm().clone());
        }
        for i in 1..=n {
            if n < 2 || !z.perm().has_right_descent(i) {
                continue;
            }
            let zs = z.perm().mul_simple_right(i);
            let below = if zs == z.perm().mul_simple_left(i) { zs } else { zs.mul_simple_left(i) };
            let below = AffineInvolution::new(below).expect("involution");
            if below.hat_length() + 1 != z.hat_length() {
                continue;
            }
            for v in go(&below, memo) {
                if !v.has_right_descent(i) {
                    out.insert(v.mul_simple_right(i));
                }
            }
        }
        let v: Vec<_> = out.into_iter().collect();
        memo.insert(z.clone(), v.clone());
        v
    }
    go(z, &mut HashMap::new())
}

/// Upper `⋖_A` covers: `u⁻¹` reads `c a b` at `i, i+1, i+2` (`a < b < c`)
/// and the cover reads `b c a` there.
pub fn atom_covers_up(u: &AffinePermutation) -> Vec<AffinePermutation> {
    let n = u.n() as i64;
    if n < 3 {
        return Vec::new();
    }
    let ui = u.inverse();
    let mut out = Vec::new();
    for i in 1..=n {
        let (c, a, b) = (ui.apply(i), ui.apply(i + 1), ui.apply(i + 2));
        if a < b && b < c {
            out.push(rotate_inverse(&ui, i, [b, c, a]).inverse());
        }
    }
    out.sort();
    out
}

/// Lower `⋖_A` covers: `v⁻¹` reads `b c a` and the cover reads `c a b`.
pub fn atom_covers_down(v: &AffinePermutation) -> Vec<AffinePermutation> {
    let n = v.n() as i64;
    if n < 3 {
        return Vec::new();
    }
    let vi = v.inverse();
    let mut out = Vec::new();
    for i in 1..=n {
        let (b, c, a) = (vi.apply(i), vi.apply(i + 1), vi.apply(i + 2));
        if a < b && b < c {
            out.push(rotate_inverse(&vi, i, [c, a, b]).inverse());
        }
    }
    out.sort();
    out
}

fn rotate_inverse(ui: &AffinePermutation, i: i64, vals: [i64; 3]) -> AffinePermutation {
    // Extended window starting at i so the three slots are contiguous.
    let seq: Vec<i64> = (i..i + ui.n() as i64)
        .map(|p| match p - i {
            k @ 0..=2 => vals[k as usize],
            _ => ui.apply(p),
        })
        .collect();
    AffinePermutation::from_window(ui.n(), &seq).expect("permuted window")
}

/// Whether `u ⋖_A v`.
pub fn cover_less_a(u: &AffinePermutation, v: &AffinePermutation) -> bool {
    u.n() == v.n() && atom_covers_up(u).contains(v)
}

/// `rank_A(w)`: the number of classes in `Inv_A(w; z) ∖ Inv_A(α_min(z); z)`.
pub fn rank_a(w: &AffinePermutation, z: &AffineInvolution) -> Result<u64> {
    Ok(inv_a_difference(w, z)?.len() as u64)
}

/// Representatives `(p, q)`, `p ∈ [n]`, of the classes in
/// `Inv_A(w; z) ∖ Inv_A(α_min(z); z)`, sorted.
///
/// `Inv_A(w; z)` holds pairs with `w(p) > w(q)` where either `p < q` both lie
/// in `{a : a ≤ z(a)}` or `p > q` both lie in `{b : z(b) < b}`. Both sets are
/// infinite but their difference is finite.
pub fn inv_a_difference(w: &AffinePermutation, z: &AffineInvolution) -> Result<Vec<(i64, i64)>> {
    if !is_atom(w, z) {
        return Err(Error::Domain(format!("{w} is not an atom of {z}")));
    }
    let base = alpha_min(z);
    let n = z.n() as i64;
    let mut out = Vec::new();
    for p in 1..=n {
        for r in 1..=n {
            let pl = p <= z.apply(p);
            if pl != (r <= z.apply(r)) {
                continue;
            }
            // Shifts k with q = r + kn and x(q) < x(p) are the k ≤ bound(x).
            let bound = |x: &AffinePermutation| div_ceil(x.apply(p) - x.apply(r), n) - 1;
            let ks: Vec<i64> = if pl {
                // q > p: a finite interval of k.
                let lo = (p - r).div_euclid(n) + 1;
                (lo..=bound(w)).filter(|&k| k > bound(&base)).collect()
            } else {
                // q < p: a ray, so only the top of it can differ.
                let top = div_ceil(p - r, n) - 1;
                (bound(&base).min(top) + 1..=bound(w).min(top)).collect()
            };
            out.extend(ks.into_iter().map(|k| (p, r + k * n)));
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(n: usize, c: &[(i64, i64)]) -> AffineInvolution {
        AffineInvolution::from_cycles(n, c).unwrap()
    }

    #[test]
    fn alpha_extremes_example() {
        let z = inv(4, &[(1, 8), (2, 7)]);
        assert_eq!(alpha_min(&z).window(), &[4, 6, 1, -1]);
        assert_eq!(alpha_max(&z).window(), &[6, 4, -1, 1]);
        assert!(is_atom(&alpha_min(&z), &z));
        assert!(is_atom(&alpha_max(&z), &z));
        assert_eq!(rank_a(&alpha_max(&z), &z).unwrap(), 2);
        assert_eq!(rank_a(&alpha_min(&z), &z).unwrap(), 0);
        assert_eq!(inv_a_difference(&alpha_max(&z), &z).unwrap().len(), 2);
        assert!(rank_a(&AffinePermutation::identity(4), &z).is_err());
    }

    #[test]
    fn atoms_of_translation() {
        let z = AffineInvolution::new(AffinePermutation::from_exact_window(4, vec![-4, 2, 3, 9]).unwrap()).unwrap();
        let want: BTreeSet<_> = [[1, 2, 3, 4], [2, 1, 3, 4], [3, 2, 1, 4]]
            .iter()
            .map(|w| AffinePermutation::from_word(4, w).unwrap())
            .collect();
        let got: BTreeSet<_> = atoms_bruteforce(&z).unwrap().into_iter().collect();
        assert_eq!(got, want);
        let rec: BTreeSet<_> = atoms_recursive(&z).into_iter().collect();
        assert_eq!(rec, want);
    }

    #[test]
    fn finite_longest_element() {
        let z = AffineInvolution::new(AffinePermutation::from_exact_window(4, vec![4, 3, 2, 1]).unwrap()).unwrap();
        let got: BTreeSet<Vec<i64>> = atoms_bruteforce(&z).unwrap().iter().map(|w| w.window().to_vec()).collect();
        let want: BTreeSet<Vec<i64>> = [vec![4, 2, 1, 3], vec![3, 4, 1, 2], vec![2, 4, 3, 1]].into_iter().collect();
        assert_eq!(got, want);
    }

    #[test]
    fn covers_down_invert_covers_up() {
        let z = inv(4, &[(1, 8), (2, 7)]);
        for u in atoms_recursive(&z) {
            for v in atom_covers_up(&u) {
                assert!(atom_covers_down(&v).contains(&u));
                assert!(cover_less_a(&u, &v));
            }
        }
    }
}
