//! Affine involutions, their cycle data and the enumeration by `ℓ̂`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{residue, AffinePermutation};

/// An involution `z = z⁻¹` in the affine symmetric group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "InvolutionInput", into = "AffinePermutation")]
pub struct AffineInvolution(AffinePermutation);

/// Accepted input shapes: a window record or a list of canonical cycles.
#[derive(Deserialize)]
#[serde(untagged)]
enum InvolutionInput {
    Window(AffinePermutation),
    Cycles { n: usize, cycles: Vec<(i64, i64)> },
}

impl TryFrom<InvolutionInput> for AffineInvolution {
    type Error = Error;
    fn try_from(r: InvolutionInput) -> Result<Self> {
        match r {
            InvolutionInput::Window(w) => AffineInvolution::new(w),
            InvolutionInput::Cycles { n, cycles } => AffineInvolution::from_cycles(n, &cycles),
        }
    }
}

impl TryFrom<AffinePermutation> for AffineInvolution {
    type Error = Error;
    fn try_from(w: AffinePermutation) -> Result<Self> {
        AffineInvolution::new(w)
    }
}

/// The `{"n", "cycles"}` form of an involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclesRecord {
    pub n: usize,
    pub cycles: Vec<(i64, i64)>,
}

impl From<AffineInvolution> for AffinePermutation {
    fn from(z: AffineInvolution) -> Self {
        z.0
    }
}

impl fmt::Debug for AffineInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for AffineInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How a position sits inside its cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EndpointKind {
    /// `z(i) = i`.
    Fixed,
    /// `i < z(i)`.
    Left,
    /// `z(i) < i`.
    Right,
}

/// One arc of the winding diagram.
///
/// `source` and `target` are residues in `[n]` with `source < target` (or
/// equal for a loop), and `label` is the `m` with `z(source) = target + mn`.
/// `span = z(a) − a` for the canonical cycle `(a, z(a))`, `a ∈ [n]`, which
/// measures how far the arc travels around the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingEdge {
    pub source: i64,
    pub target: i64,
    pub label: i64,
    pub start: i64,
    pub span: i64,
}

impl AffineInvolution {
    /// Wraps a permutation after checking `w² = 1`.
    pub fn new(w: AffinePermutation) -> Result<Self> {
        if !w.is_involution() {
            return Err(Error::NotInvolution(w.to_string()));
        }
        Ok(AffineInvolution(w))
    }

    /// The identity.
    pub fn identity(n: usize) -> Self {
        AffineInvolution(AffinePermutation::identity(n))
    }

    /// Builds `∏ t_ab` from disjoint cycles `(a, b)`; any translate may be used.
    pub fn from_cycles(n: usize, cycles: &[(i64, i64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWindow("rank must be positive".into()));
        }
        let ni = n as i64;
        let mut window: Vec<i64> = (1..=ni).collect();
        let mut used = vec![false; n];
        for &(a, b) in cycles {
            if a == b {
                continue;
            }
            let (ra, rb) = (residue(a, n), residue(b, n));
            if ra == rb {
                return Err(Error::NotInvolution(format!("cycle ({a},{b}) joins a residue class to itself")));
            }
            for r in [ra, rb] {
                if used[(r - 1) as usize] {
                    return Err(Error::NotInvolution(format!("residue {r} appears in two cycles")));
                }
                used[(r - 1) as usize] = true;
            }
            window[(ra - 1) as usize] = ra + (b - a);
            window[(rb - 1) as usize] = rb + (a - b);
        }
        Ok(AffineInvolution(AffinePermutation::from_exact_window(n, window)?))
    }

    /// The underlying permutation.
    #[inline]
    pub fn perm(&self) -> &AffinePermutation {
        &self.0
    }

    /// Rank.
    #[inline]
    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// `z(i)`.
    #[inline]
    pub fn apply(&self, i: i64) -> i64 {
        self.0.apply(i)
    }

    /// Window of `z`.
    pub fn window(&self) -> &[i64] {
        self.0.window()
    }

    /// The `{"n", "cycles"}` record.
    pub fn cycles_record(&self) -> CyclesRecord {
        CyclesRecord { n: self.n(), cycles: self.canonical_cycles() }
    }

    /// Canonical cycle representatives `(a, z(a))` with `a ∈ [n]`, `a < z(a)`.
    pub fn canonical_cycles(&self) -> Vec<(i64, i64)> {
        (1..=self.n() as i64)
            .filter_map(|a| {
                let b = self.apply(a);
                (a < b).then_some((a, b))
            })
            .collect()
    }

    /// Canonical representative of the cycle class of `(a, b) ∈ C(z)`.
    pub fn canonical_cycle_of(&self, a: i64, b: i64) -> Result<(i64, i64)> {
        if !(a < b && self.apply(a) == b) {
            return Err(Error::Domain(format!("({a},{b}) is not a cycle of {self}")));
        }
        let shift = a - residue(a, self.n());
        Ok((a - shift, b - shift))
    }

    /// Coxeter length `ℓ(z)`.
    pub fn length(&self) -> u64 {
        self.0.length()
    }

    /// Absolute length `ℓ′(z)`: the number of cycle classes.
    pub fn absolute_length(&self) -> u64 {
        self.canonical_cycles().len() as u64
    }

    /// `ℓ̂(z) = (ℓ(z) + ℓ′(z)) / 2`.
    pub fn hat_length(&self) -> u64 {
        (self.length() + self.absolute_length()) / 2
    }

    /// Classifies position `i`.
    pub fn endpoint_kind(&self, i: i64) -> EndpointKind {
        let zi = self.apply(i);
        match zi.cmp(&i) {
            std::cmp::Ordering::Equal => EndpointKind::Fixed,
            std::cmp::Ordering::Greater => EndpointKind::Left,
            std::cmp::Ordering::Less => EndpointKind::Right,
        }
    }

    /// The Demazure conjugate `s_i ∘ z ∘ s_i`.
    pub fn demazure_conjugate(&self, i: i64) -> Self {
        let z = &self.0;
        if z.has_right_descent(i) {
            return self.clone();
        }
        let zs = z.mul_simple_right(i);
        let sz = z.mul_simple_left(i);
        if zs == sz {
            AffineInvolution(zs)
        } else {
            AffineInvolution(sz.mul_simple_right(i))
        }
    }

    /// Ordinary conjugation `w z w⁻¹`.
    pub fn conjugate_by(&self, w: &AffinePermutation) -> Result<Self> {
        let p = w.compose(&self.0)?.compose(&w.inverse())?;
        Ok(AffineInvolution(p))
    }

    /// The image under `w ↦ τwτ`.
    pub fn star(&self) -> Self {
        AffineInvolution(self.0.star())
    }

    /// Whether `z` is a product of pairwise commuting simple generators,
    /// i.e. `ℓ(z) = ℓ′(z)`.
    pub fn is_matching(&self) -> bool {
        self.length() == self.absolute_length()
    }

    /// Whether `z` avoids the pattern `321`: no `a < b < c` with
    /// `z(a) > z(b) > z(c)`.
    pub fn is_321_avoiding(&self) -> bool {
        is_321_avoiding(&self.0)
    }

    /// Arcs of the winding diagram in `source` order.
    pub fn winding_edges(&self) -> Vec<WindingEdge> {
        let n = self.n();
        let ni = n as i64;
        let mut edges: Vec<WindingEdge> = self
            .canonical_cycles()
            .into_iter()
            .map(|(a, b)| {
                let rb = residue(b, n);
                let (source, target) = if a <= rb { (a, rb) } else { (rb, a) };
                let label = (self.apply(source) - target).div_euclid(ni);
                WindingEdge { source, target, label, start: a, span: b - a }
            })
            .collect();
        edges.sort_by_key(|e| (e.source, e.target));
        edges
    }
}

/// Whether `w` avoids `321`.
///
/// An inversion `(p, q)` with `q − p > n·k` forces `k` other inversion classes,
/// so the middle index only needs to be compared within `n(ℓ(w) + 1)`.
pub fn is_321_avoiding(w: &AffinePermutation) -> bool {
    let ni = w.n() as i64;
    let reach = ni * (w.length() as i64 + 1);
    (1..=ni).all(|b| {
        let wb = w.apply(b);
        let left = (b - reach..b).any(|a| w.apply(a) > wb);
        let right = (b + 1..=b + reach).any(|c| w.apply(c) < wb);
        !(left && right)
    })
}

/// Whether no reduced word of `w` contains `i, i+1, i` or `i+1, i, i+1`.
///
/// Explores the commutation class of one reduced word: if no braid factor
/// occurs there, no braid move is available and the class is every reduced
/// word. For `n ≤ 2` there are no braid relations and every element qualifies.
pub fn is_fully_commutative(w: &AffinePermutation) -> bool {
    let n = w.n();
    if n <= 2 {
        return true;
    }
    let commute = |a: i64, b: i64| {
        let d = (a - b).rem_euclid(n as i64);
        d != 1 && d != n as i64 - 1 && d != 0
    };
    let braid = |word: &[i64]| {
        word.windows(3).any(|t| {
            t[0] == t[2] && {
                let d = (t[0] - t[1]).rem_euclid(n as i64);
                d == 1 || d == n as i64 - 1
            }
        })
    };
    let start = w.reduced_word();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack = vec![start.clone()];
    seen.insert(start);
    while let Some(word) = stack.pop() {
        if braid(&word) {
            return false;
        }
        for k in 0..word.len().saturating_sub(1) {
            if commute(word[k], word[k + 1]) {
                let mut next = word.clone();
                next.swap(k, k + 1);
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    true
}

/// Lazy enumeration of involutions in increasing `ℓ̂`, layer by layer.
///
/// Each layer is produced from the previous one by Demazure conjugation,
/// which raises `ℓ̂` by at most one, and is emitted in window order.
pub struct Involutions {
    n: usize,
    max_hat: u64,
    level: u64,
    layer: std::vec::IntoIter<AffineInvolution>,
    current: Vec<AffineInvolution>,
    finished: bool,
}

impl Involutions {
    /// Involutions of rank `n` with `ℓ̂ ≤ max_hat`.
    pub fn new(n: usize, max_hat: u64) -> Self {
        let id = vec![AffineInvolution::identity(n)];
        Involutions { n, max_hat, level: 0, layer: id.clone().into_iter(), current: id, finished: false }
    }

    fn advance(&mut self) -> bool {
        if self.finished || self.level >= self.max_hat || self.n < 2 {
            self.finished = true;
            return false;
        }
        let mut next: BTreeSet<AffineInvolution> = BTreeSet::new();
        for z in &self.current {
            for i in 1..=self.n as i64 {
                let y = z.demazure_conjugate(i);
                if &y != z {
                    next.insert(y);
                }
            }
        }
        self.level += 1;
        self.current = next.into_iter().collect();
        self.layer = self.current.clone().into_iter();
        !self.current.is_empty()
    }
}

impl Iterator for Involutions {
    type Item = AffineInvolution;
    fn next(&mut self) -> Option<AffineInvolution> {
        loop {
            if let Some(z) = self.layer.next() {
                return Some(z);
            }
            if !self.advance() {
                return None;
            }
        }
    }
}

/// All involutions with `ℓ̂ ≤ max_hat`, ordered by `ℓ̂` then window.
pub fn enumerate_involutions(n: usize, max_hat: u64) -> Vec<AffineInvolution> {
    Involutions::new(n, max_hat).collect()
}

/// Involutions grouped by `ℓ̂`.
pub fn involutions_by_hat(n: usize, max_hat: u64) -> BTreeMap<u64, Vec<AffineInvolution>> {
    let mut out: BTreeMap<u64, Vec<AffineInvolution>> = BTreeMap::new();
    for z in Involutions::new(n, max_hat) {
        out.entry(z.hat_length()).or_default().push(z);
    }
    out
}

/// Standardisation `[w]_E = ψ̃ ∘ w ∘ φ̃` of `w` to the residues of `E`.
///
/// `φ̃` is the order-preserving bijection `ℤ → E + nℤ` sending `[m]` into
/// `[n]`, and `ψ̃` the order-preserving bijection `w(E) + nℤ → ℤ` normalised
/// so that the result is an affine permutation of rank `m = |E mod n|`.
pub fn standardize(w: &AffinePermutation, e: &[i64]) -> Result<AffinePermutation> {
    let n = w.n();
    let ni = n as i64;
    let dom: BTreeSet<i64> = e.iter().map(|&x| residue(x, n)).collect();
    if dom.is_empty() {
        return Err(Error::Domain("standardisation to an empty set".into()));
    }
    let dom: Vec<i64> = dom.into_iter().collect();
    let m = dom.len() as i64;
    let img: Vec<i64> = {
        let s: BTreeSet<i64> = dom.iter().map(|&x| residue(w.apply(x), n)).collect();
        s.into_iter().collect()
    };
    let psi0 = |v: i64| -> i64 {
        let q = (v - 1).div_euclid(ni);
        let r = v - q * ni;
        let k = img.binary_search(&r).expect("value lies in w(E) + nℤ") as i64 + 1;
        k + q * m
    };
    let raw: Vec<i64> = dom.iter().map(|&x| psi0(w.apply(x))).collect();
    let sum: i64 = raw.iter().sum();
    let want = m * (m + 1) / 2;
    debug_assert_eq!((want - sum).rem_euclid(m), 0);
    let c = (want - sum) / m;
    AffinePermutation::from_exact_window(m as usize, raw.into_iter().map(|v| v + c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn running_example() {
        let z = AffineInvolution::from_cycles(8, &[(1, 12), (7, 10), (3, 6)]).unwrap();
        assert_eq!(z.absolute_length(), 3);
        assert_eq!(z.length(), 25);
        let labels: Vec<(i64, i64, i64)> = z.winding_edges().iter().map(|e| (e.source, e.target, e.label)).collect();
        assert_eq!(labels, vec![(1, 4, 1), (2, 7, -1), (3, 6, 0)]);
    }

    #[test]
    fn demazure_conjugation_cases() {
        let id = AffineInvolution::identity(3);
        let s1 = id.demazure_conjugate(1);
        assert_eq!(s1.perm(), &AffinePermutation::simple(3, 1).unwrap());
        assert_eq!(s1.demazure_conjugate(1), s1);
        let y = s1.demazure_conjugate(2);
        assert_eq!(y.length(), 3);
        assert_eq!(y.hat_length(), 2);
    }

    #[test]
    fn first_layers() {
        let by = involutions_by_hat(3, 2);
        assert_eq!(by[&0].len(), 1);
        assert_eq!(by[&1].len(), 3);
        for (h, zs) in by {
            for z in zs {
                assert_eq!(z.hat_length(), h);
            }
        }
    }

    #[test]
    fn standardisation_example() {
        let y = AffineInvolution::from_cycles(8, &[(1, 3), (2, 12), (6, 8)]).unwrap();
        let got = standardize(y.perm(), &[2, 4, 6, 7, 8]).unwrap();
        let want = AffineInvolution::from_cycles(5, &[(1, 7), (3, 5)]).unwrap();
        assert_eq!(&got, want.perm());
    }

    #[test]
    fn cycles_validation() {
        assert!(AffineInvolution::from_cycles(4, &[(1, 5)]).is_err());
        assert!(AffineInvolution::from_cycles(4, &[(1, 2), (2, 3)]).is_err());
        assert!(AffineInvolution::new(AffinePermutation::from_exact_window(3, vec![2, 3, 1]).unwrap()).is_err());
    }

    #[test]
    fn fully_commutative_examples() {
        let n = 3;
        let w = AffinePermutation::from_word(n, &[1, 2, 1]).unwrap();
        assert!(!is_fully_commutative(&w));
        assert!(!is_321_avoiding(&w));
        let v = AffinePermutation::from_word(n, &[1, 2, 3]).unwrap();
        assert!(is_fully_commutative(&v));
        assert!(is_321_avoiding(&v));
    }
}
