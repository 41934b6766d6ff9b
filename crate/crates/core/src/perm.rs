//! Affine permutations of rank `n`.
//!
//! An element `w` of the affine symmetric group is a bijection of the
//! integers with `w(i + n) = w(i) + n` whose window `[w(1), …, w(n)]` sums to
//! `n(n+1)/2`. Everything here works on that window.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Residue of `x` in `{1, …, n}`.
#[inline]
pub fn residue(x: i64, n: usize) -> i64 {
    (x - 1).rem_euclid(n as i64) + 1
}

/// Serialized form `{"n": …, "window": […]}`.
#[derive(Serialize, Deserialize)]
struct PermRecord {
    n: usize,
    window: Vec<i64>,
}

/// An element of the affine symmetric group, stored by its window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermRecord", into = "PermRecord")]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl TryFrom<PermRecord> for AffinePermutation {
    type Error = Error;
    fn try_from(r: PermRecord) -> Result<Self> {
        AffinePermutation::from_exact_window(r.n, r.window)
    }
}

impl From<AffinePermutation> for PermRecord {
    fn from(w: AffinePermutation) -> Self {
        PermRecord { n: w.n, window: w.window }
    }
}

impl fmt::Debug for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl AffinePermutation {
    /// The identity of rank `n`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        AffinePermutation { n, window: (1..=n as i64).collect() }
    }

    /// Builds an element from its exact window `[w(1), …, w(n)]`.
    pub fn from_exact_window(n: usize, window: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWindow("rank must be positive".into()));
        }
        if window.len() != n {
            return Err(Error::InvalidWindow(format!("expected {n} entries, got {}", window.len())));
        }
        let mut seen = vec![false; n];
        for &v in &window {
            let r = (residue(v, n) - 1) as usize;
            if seen[r] {
                return Err(Error::InvalidWindow(format!("entries of {window:?} repeat a residue mod {n}")));
            }
            seen[r] = true;
        }
        let sum: i128 = window.iter().map(|&v| v as i128).sum();
        let want = (n as i128) * (n as i128 + 1) / 2;
        if sum != want {
            return Err(Error::InvalidWindow(format!("window {window:?} sums to {sum}, expected {want}")));
        }
        Ok(AffinePermutation { n, window })
    }

    /// Builds an element from an extended window `[a_1, …, a_N]`.
    ///
    /// Only the first entry of each residue class is kept; the kept entries
    /// `a_1, …, a_n` then satisfy `w(m + i) = a_i` with
    /// `m = (1/n) Σ (a_i − i)`.
    pub fn from_window(n: usize, values: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWindow("rank must be positive".into()));
        }
        let mut seen = vec![false; n];
        let mut kept = Vec::with_capacity(n);
        for &v in values {
            let r = (residue(v, n) - 1) as usize;
            if !seen[r] {
                seen[r] = true;
                kept.push(v);
            }
        }
        if kept.len() != n {
            return Err(Error::InvalidWindow(format!("{values:?} covers only {} of {n} residues", kept.len())));
        }
        let ni = n as i64;
        let shift: i64 = kept.iter().enumerate().map(|(k, &a)| a - (k as i64 + 1)).sum();
        // Distinct residues force the shift to be a multiple of n.
        debug_assert_eq!(shift.rem_euclid(ni), 0);
        let m = shift.div_euclid(ni);
        let mut window = vec![0; n];
        for (k, &a) in kept.iter().enumerate() {
            let pos = m + k as i64 + 1;
            let q = (pos - 1).div_euclid(ni);
            window[(pos - 1 - q * ni) as usize] = a - q * ni;
        }
        AffinePermutation::from_exact_window(n, window)
    }

    /// The simple generator `s_i`, which swaps `i + mn` and `i + 1 + mn`.
    pub fn simple(n: usize, i: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("no simple generators for n = {n}")));
        }
        Ok(Self::identity(n).mul_simple_right(i))
    }

    /// The reflection `t_ij` swapping `i + mn` and `j + mn` for all `m`.
    pub fn reflection(n: usize, i: i64, j: i64) -> Result<Self> {
        let ni = n as i64;
        if n == 0 || (i - j).rem_euclid(ni.max(1)) == 0 {
            return Err(Error::InvalidReflection { n, i, j });
        }
        let mut window: Vec<i64> = (1..=ni).collect();
        let (ri, rj) = (residue(i, n), residue(j, n));
        window[(ri - 1) as usize] = ri + (j - i);
        window[(rj - 1) as usize] = rj + (i - j);
        Ok(AffinePermutation { n, window })
    }

    /// The product `s_{i_1} ⋯ s_{i_k}` of a word in the simple generators.
    pub fn from_word(n: usize, word: &[i64]) -> Result<Self> {
        if n < 2 && !word.is_empty() {
            return Err(Error::Domain(format!("no simple generators for n = {n}")));
        }
        let mut w = Self::identity(n);
        for &i in word {
            w = w.mul_simple_right(i);
        }
        Ok(w)
    }

    /// Rank `n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    fn ni(&self) -> i64 {
        self.n as i64
    }

    /// The window `[w(1), …, w(n)]`.
    #[inline]
    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// Evaluates `w(i)` for any integer `i`.
    #[inline]
    pub fn apply(&self, i: i64) -> i64 {
        let ni = self.ni();
        let q = (i - 1).div_euclid(ni);
        self.window[(i - 1 - q * ni) as usize] + q * ni
    }

    /// Whether this is the identity.
    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k as i64 + 1)
    }

    /// Whether `w² = 1`.
    pub fn is_involution(&self) -> bool {
        (1..=self.ni()).all(|i| self.apply(self.apply(i)) == i)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// The product `self · other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(self.mul(other))
    }

    /// Unchecked product; panics on rank mismatch.
    pub(crate) fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch");
        let window = other.window.iter().map(|&v| self.apply(v)).collect();
        AffinePermutation { n: self.n, window }
    }

    /// The inverse element.
    pub fn inverse(&self) -> Self {
        let ni = self.ni();
        let mut window = vec![0; self.n];
        for (k, &v) in self.window.iter().enumerate() {
            let q = (v - 1).div_euclid(ni);
            window[(v - 1 - q * ni) as usize] = k as i64 + 1 - q * ni;
        }
        AffinePermutation { n: self.n, window }
    }

    /// `w · s_i`: swaps the values at positions `i` and `i + 1`.
    pub fn mul_simple_right(&self, i: i64) -> Self {
        assert!(self.n >= 2, "no simple generators for n = {}", self.n);
        let ni = self.ni();
        let r = residue(i, self.n);
        let mut window = self.window.clone();
        if r < ni {
            window.swap((r - 1) as usize, r as usize);
        } else {
            let last = window[self.n - 1];
            window[self.n - 1] = window[0] + ni;
            window[0] = last - ni;
        }
        AffinePermutation { n: self.n, window }
    }

    /// `s_i · w`: swaps the values `i + mn` and `i + 1 + mn`.
    pub fn mul_simple_left(&self, i: i64) -> Self {
        assert!(self.n >= 2, "no simple generators for n = {}", self.n);
        let r = residue(i, self.n);
        let r1 = residue(i + 1, self.n);
        let window = self
            .window
            .iter()
            .map(|&v| {
                let rv = residue(v, self.n);
                if rv == r {
                    v + 1
                } else if rv == r1 {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation { n: self.n, window }
    }

    /// Coxeter length: the number of pairs `(i, j)` with `i ∈ [n]`, `i < j`
    /// and `w(i) > w(j)`.
    pub fn length(&self) -> u64 {
        let ni = self.ni();
        let mut total: i64 = 0;
        for i in 1..=ni {
            let wi = self.apply(i);
            for r in 1..=ni {
                let wr = self.apply(r);
                // j = r + kn with j > i and w(j) = wr + kn < wi.
                let k_min = (i - r).div_euclid(ni) + 1;
                let k_max = div_ceil(wi - wr, ni) - 1;
                if k_max >= k_min {
                    total += k_max - k_min + 1;
                }
            }
        }
        total as u64
    }

    /// Whether `s_i` is a right descent, i.e. `w(i) > w(i + 1)`.
    #[inline]
    pub fn has_right_descent(&self, i: i64) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// Whether `s_i` is a left descent, i.e. `w⁻¹(i) > w⁻¹(i + 1)`.
    pub fn has_left_descent(&self, i: i64) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Right descents as indices in `[n]`.
    pub fn right_descents(&self) -> Vec<i64> {
        if self.n < 2 {
            return Vec::new();
        }
        (1..=self.ni()).filter(|&i| self.has_right_descent(i)).collect()
    }

    /// Left descents as indices in `[n]`.
    pub fn left_descents(&self) -> Vec<i64> {
        self.inverse().right_descents()
    }

    /// A reduced word `[i_1, …, i_k]` with `w = s_{i_1} ⋯ s_{i_k}`.
    ///
    /// The smallest right descent is peeled off at each step, so the result
    /// is deterministic.
    pub fn reduced_word(&self) -> Vec<i64> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(&i) = w.right_descents().first() {
            word.push(i);
            w = w.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    /// Demazure product `self ∘ other`.
    pub fn demazure(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut w = self.clone();
        for i in other.reduced_word() {
            if !w.has_right_descent(i) {
                w = w.mul_simple_right(i);
            }
        }
        Ok(w)
    }

    /// Bruhat order test `self ≤ other`.
    pub fn bruhat_leq(&self, other: &Self) -> Result<bool> {
        self.check_rank(other)?;
        let mut u = self.clone();
        let mut v = other.clone();
        let mut lu = u.length();
        let mut lv = v.length();
        loop {
            if lu > lv {
                return Ok(false);
            }
            if lv == 0 {
                return Ok(u.is_identity());
            }
            let s = v.right_descents()[0];
            v = v.mul_simple_right(s);
            lv -= 1;
            if u.has_right_descent(s) {
                u = u.mul_simple_right(s);
                lu -= 1;
            }
        }
    }

    /// All `v` covering `self` in Bruhat order, as `(v, t)` with `v = self · t`.
    pub fn bruhat_covers_up(&self) -> Vec<(AffinePermutation, Reflection)> {
        let ni = self.ni();
        if self.n < 2 {
            return Vec::new();
        }
        let span = ni * (self.length() as i64 + 2);
        let mut out = Vec::new();
        for i in 1..=ni {
            let wi = self.apply(i);
            for j in i + 1..=i + span {
                if (j - i) % ni == 0 {
                    continue;
                }
                let wj = self.apply(j);
                if wi < wj
                    && ((i + 1)..j).all(|e| {
                        let we = self.apply(e);
                        !(wi < we && we < wj)
                    })
                {
                    let t = Reflection::new(self.n, i, j).expect("i ≢ j checked");
                    out.push((self.mul(&t.to_perm()), t));
                }
            }
        }
        out.sort();
        out
    }

    /// The automorphism `w ↦ τwτ` with `τ(i) = n + 1 − i`; sends `s_i` to `s_{n−i}`.
    pub fn star(&self) -> Self {
        let ni = self.ni();
        let window = (1..=ni).map(|k| ni + 1 - self.apply(ni + 1 - k)).collect();
        AffinePermutation { n: self.n, window }
    }
}

/// Ceiling division for a positive divisor.
#[inline]
pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// A reflection `t_ij` normalised so that `i ∈ [n]` and `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Reflection {
    n: usize,
    i: i64,
    j: i64,
}

impl Reflection {
    /// Normalises `t_ij`; since `t_ij = t_ji = t_{i+n, j+n}` this is unique.
    pub fn new(n: usize, i: i64, j: i64) -> Result<Self> {
        let ni = n as i64;
        if n == 0 || (i - j).rem_euclid(ni) == 0 {
            return Err(Error::InvalidReflection { n, i, j });
        }
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let shift = lo - residue(lo, n);
        Ok(Reflection { n, i: lo - shift, j: hi - shift })
    }

    /// Rank.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The pair `(i, j)`.
    pub fn pair(&self) -> (i64, i64) {
        (self.i, self.j)
    }

    /// The reflection as a permutation.
    pub fn to_perm(&self) -> AffinePermutation {
        AffinePermutation::reflection(self.n, self.i, self.j).expect("validated on construction")
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t_({},{})", self.i, self.j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, v: &[i64]) -> AffinePermutation {
        AffinePermutation::from_exact_window(n, v.to_vec()).unwrap()
    }

    /// Inversions counted pair by pair over a generous range.
    fn length_oracle(x: &AffinePermutation) -> u64 {
        let n = x.n() as i64;
        let span = n * (x.window().iter().map(|v| v.abs()).max().unwrap() + 2 * n);
        let mut c = 0;
        for i in 1..=n {
            for j in i + 1..=i + span {
                if x.apply(i) > x.apply(j) {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn extended_window_example() {
        let x = AffinePermutation::from_window(3, &[1, 0, 1, 3, 8, 4, 2]).unwrap();
        let y = AffinePermutation::from_window(3, &[1, 0, 8]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.apply(2), 1);
        assert_eq!(x.apply(3), 0);
        assert_eq!(x.apply(4), 8);
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(AffinePermutation::from_exact_window(3, vec![1, 2, 4]).is_err());
        assert!(AffinePermutation::from_exact_window(3, vec![1, 4, 1]).is_err());
        assert!(AffinePermutation::from_window(3, &[1, 4]).is_err());
        assert!(AffinePermutation::reflection(3, 1, 4).is_err());
    }

    #[test]
    fn reflections_are_symmetric_and_periodic() {
        let a = AffinePermutation::reflection(5, 3, 10).unwrap();
        let b = AffinePermutation::reflection(5, 10, 3).unwrap();
        let c = AffinePermutation::reflection(5, 8, 15).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.apply(3), 10);
        assert_eq!(a.apply(5), -2);
        assert!(a.is_involution());
        assert_eq!(Reflection::new(5, 15, 8).unwrap().pair(), (3, 10));
    }

    #[test]
    fn simple_generators() {
        let s0 = AffinePermutation::simple(3, 0).unwrap();
        assert_eq!(s0.window(), &[0, 2, 4]);
        assert_eq!(s0, AffinePermutation::simple(3, 3).unwrap());
        assert_eq!(s0.length(), 1);
        assert_eq!(AffinePermutation::simple(2, 2).unwrap().window(), &[0, 3]);
    }

    #[test]
    fn length_matches_oracle_on_words() {
        for n in 2..=4usize {
            let mut frontier = vec![AffinePermutation::identity(n)];
            for _ in 0..5 {
                let mut next = Vec::new();
                for x in &frontier {
                    assert_eq!(x.length(), length_oracle(x), "{x}");
                    for i in 1..=n as i64 {
                        next.push(x.mul_simple_right(i));
                    }
                }
                next.sort();
                next.dedup();
                frontier = next;
            }
        }
    }

    #[test]
    fn reduced_word_round_trip() {
        let x = w(4, &[-3, 6, 0, 7]);
        let word = x.reduced_word();
        assert_eq!(word.len() as u64, x.length());
        assert_eq!(AffinePermutation::from_word(4, &word).unwrap(), x);
    }

    #[test]
    fn left_and_right_simple_multiplication_agree_with_compose() {
        let x = w(4, &[-3, 6, 0, 7]);
        for i in 0..6 {
            let s = AffinePermutation::simple(4, i).unwrap();
            assert_eq!(x.mul_simple_right(i), x.mul(&s));
            assert_eq!(x.mul_simple_left(i), s.mul(&x));
        }
        assert!(x.mul(&x.inverse()).is_identity());
    }

    #[test]
    fn star_sends_s_i_to_s_n_minus_i() {
        for i in 0..4 {
            let s = AffinePermutation::simple(4, i).unwrap();
            assert_eq!(s.star(), AffinePermutation::simple(4, 4 - i).unwrap());
        }
    }

    #[test]
    fn bruhat_cover_condition() {
        let x = w(3, &[2, 0, 4]);
        let l = x.length();
        for (v, _) in x.bruhat_covers_up() {
            assert_eq!(v.length(), l + 1);
            assert!(x.bruhat_leq(&v).unwrap());
            assert!(!v.bruhat_leq(&x).unwrap());
        }
    }

    #[test]
    fn demazure_of_inverse_pair() {
        let s1 = AffinePermutation::simple(3, 1).unwrap();
        assert_eq!(s1.demazure(&s1).unwrap(), s1);
        let e = AffinePermutation::identity(3);
        assert_eq!(e.demazure(&s1).unwrap(), s1);
        assert!(s1.demazure(&AffinePermutation::identity(4)).is_err());
    }

    #[test]
    fn serde_round_trip() {
        let x = w(4, &[-3, 6, 0, 7]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"n":4,"window":[-3,6,0,7]}"#);
        let y: AffinePermutation = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"n":2,"window":[1,1]}"#).is_err());
    }
}
