//! Weighted involutions and the operators `π_i` acting on them.
//!
//! A weighted involution `θ = (w, φ)` attaches a nonnegative weight to each
//! cycle class of an affine involution `w`. Its length is `ℓ(w) + 2·wt(θ)`.
//! The right and left actions of the 0-Hecke generators move weight across
//! adjacent positions while conjugating the base; iterating them until no
//! weight remains defines the maps `ω_R` and `ω_L`, which are inverted by
//! `λ_R` and `λ_L` on the set `M_n` of weighted matchings.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involution::AffineInvolution;
use crate::perm::{residue, AffinePermutation};

/// Serialized form `{"n": …, "cycles": [[a, b, φ(a,b)], …]}`.
#[derive(Serialize, Deserialize)]
struct WeightedRecord {
    n: usize,
    cycles: Vec<(i64, i64, u64)>,
}

/// An affine involution together with a weight on each cycle class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightedRecord", into = "WeightedRecord")]
pub struct WeightedInvolution {
    base: AffineInvolution,
    /// Keyed by canonical cycles; zero weights are not stored.
    weights: BTreeMap<(i64, i64), u64>,
}

impl TryFrom<WeightedRecord> for WeightedInvolution {
    type Error = Error;
    fn try_from(r: WeightedRecord) -> Result<Self> {
        let pairs: Vec<(i64, i64)> = r.cycles.iter().map(|&(a, b, _)| (a, b)).collect();
        let base = AffineInvolution::from_cycles(r.n, &pairs)?;
        WeightedInvolution::new(base, &r.cycles)
    }
}

impl From<WeightedInvolution> for WeightedRecord {
    fn from(t: WeightedInvolution) -> Self {
        WeightedRecord { n: t.n(), cycles: t.cycles() }
    }
}

impl fmt::Debug for WeightedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.base)?;
        for (k, (a, b, w)) in self.cycles().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b}):{w}")?;
        }
        write!(f, "}}")
    }
}

impl WeightedInvolution {
    /// Attaches weights `(a, b, φ)` to cycles of `base`; any translate of a
    /// cycle may be named and unnamed cycles get weight zero.
    pub fn new(base: AffineInvolution, entries: &[(i64, i64, u64)]) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for &(a, b, w) in entries {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            let key = base
                .canonical_cycle_of(lo, hi)
                .map_err(|_| Error::InvalidWeights(format!("({a},{b}) is not a cycle of {base}")))?;
            if w > 0 && weights.insert(key, w).is_some() {
                return Err(Error::InvalidWeights(format!("cycle ({a},{b}) weighted twice")));
            }
        }
        Ok(WeightedInvolution { base, weights })
    }

    /// The involution with all weights zero.
    pub fn unweighted(base: AffineInvolution) -> Self {
        WeightedInvolution { base, weights: BTreeMap::new() }
    }

    /// Underlying involution `w`.
    pub fn base(&self) -> &AffineInvolution {
        &self.base
    }

    /// Rank.
    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Canonical cycles with their weights, including zero weights.
    pub fn cycles(&self) -> Vec<(i64, i64, u64)> {
        self.base
            .canonical_cycles()
            .into_iter()
            .map(|(a, b)| (a, b, self.weights.get(&(a, b)).copied().unwrap_or(0)))
            .collect()
    }

    /// Total weight `wt(θ)`.
    pub fn weight(&self) -> u64 {
        self.weights.values().sum()
    }

    /// `ℓ(θ) = ℓ(w) + 2·wt(θ)`.
    pub fn length(&self) -> u64 {
        self.base.length() + 2 * self.weight()
    }

    /// `φ(a, b)` for a cycle `(a, b) ∈ C(w)`.
    pub fn phi(&self, a: i64, b: i64) -> Result<u64> {
        let key = self.base.canonical_cycle_of(a, b)?;
        Ok(self.weights.get(&key).copied().unwrap_or(0))
    }

    fn phi_unchecked(&self, a: i64, b: i64) -> u64 {
        let shift = a - residue(a, self.n());
        self.weights.get(&(a - shift, b - shift)).copied().unwrap_or(0)
    }

    /// `φ_R(i)`: the weight of the cycle ending at `i`, or zero.
    pub fn right_form(&self, i: i64) -> u64 {
        let wi = self.base.apply(i);
        if wi < i {
            self.phi_unchecked(wi, i)
        } else {
            0
        }
    }

    /// `φ_L(i)`: the weight of the cycle starting at `i`, or zero.
    pub fn left_form(&self, i: i64) -> u64 {
        let wi = self.base.apply(i);
        if i < wi {
            self.phi_unchecked(i, wi)
        } else {
            0
        }
    }

    /// Indices `i ∈ [n]` with `φ_R(i) > φ_R(i + 1)`.
    pub fn right_descents(&self) -> Vec<i64> {
        if self.n() < 2 {
            return Vec::new();
        }
        (1..=self.n() as i64).filter(|&i| self.right_form(i) > self.right_form(i + 1)).collect()
    }

    /// Indices `i ∈ [n]` with `φ_L(i + 1) > φ_L(i)`.
    pub fn left_descents(&self) -> Vec<i64> {
        if self.n() < 2 {
            return Vec::new();
        }
        (1..=self.n() as i64).filter(|&i| self.left_form(i + 1) > self.left_form(i)).collect()
    }

    fn conjugated_base(&self, i: i64) -> AffineInvolution {
        let p = self.base.perm().mul_simple_left(i).mul_simple_right(i);
        AffineInvolution::new(p).expect("conjugate of an involution")
    }

    /// Right action `θ π_i`.
    pub fn pi_right(&self, i: i64) -> Self {
        let (a, b) = (self.right_form(i), self.right_form(i + 1));
        if a <= b {
            return self.clone();
        }
        let n = self.n();
        let (ri, ri1) = (residue(i, n), residue(i + 1, n));
        let psi_r = |j: i64| -> u64 {
            let r = residue(j, n);
            if r == ri1 {
                a - 1
            } else if r == ri {
                b
            } else {
                self.right_form(j)
            }
        };
        let base = self.conjugated_base(i);
        let weights =
            base.canonical_cycles().into_iter().map(|(x, y)| ((x, y), psi_r(y))).filter(|&(_, w)| w > 0).collect();
        WeightedInvolution { base, weights }
    }

    /// Left action `π_i θ`.
    pub fn pi_left(&self, i: i64) -> Self {
        let (a, b) = (self.left_form(i), self.left_form(i + 1));
        if b <= a {
            return self.clone();
        }
        let n = self.n();
        let (ri, ri1) = (residue(i, n), residue(i + 1, n));
        let chi_l = |j: i64| -> u64 {
            let r = residue(j, n);
            if r == ri {
                b - 1
            } else if r == ri1 {
                a
            } else {
                self.left_form(j)
            }
        };
        let base = self.conjugated_base(i);
        let weights =
            base.canonical_cycles().into_iter().map(|(x, y)| ((x, y), chi_l(x))).filter(|&(_, w)| w > 0).collect();
        WeightedInvolution { base, weights }
    }

    /// `θ π_{i_1} ⋯ π_{i_k}`, applied left to right.
    pub fn pi_right_word(&self, word: &[i64]) -> Self {
        word.iter().fold(self.clone(), |t, &i| t.pi_right(i))
    }

    /// `π_{i_1} ⋯ π_{i_k} θ`, so `i_k` acts first.
    pub fn pi_left_word(&self, word: &[i64]) -> Self {
        word.iter().rev().fold(self.clone(), |t, &i| t.pi_left(i))
    }

    /// Image under `τ`, which sends the cycle `(a, b)` to `(τ(b), τ(a))`.
    pub fn star(&self) -> Self {
        let n1 = self.n() as i64 + 1;
        let base = self.base.star();
        let weights = self
            .weights
            .iter()
            .map(|(&(a, b), &w)| {
                let key = base.canonical_cycle_of(n1 - b, n1 - a).expect("star maps cycles to cycles");
                (key, w)
            })
            .collect();
        WeightedInvolution { base, weights }
    }

    /// A right-inadmissible sequence `(x,y), (a_0,b_0), …, (a_k,b_k)` if one exists.
    ///
    /// Such a sequence has `x < a_k < b_k < ⋯ < b_0 < y` and
    /// `φ(a_i,b_i) + b_i + i ≥ φ(x,y) + y` for every `i`.
    pub fn right_inadmissible_witness(&self) -> Option<Vec<(i64, i64)>> {
        for (x, y) in self.base.canonical_cycles() {
            let target = self.phi_unchecked(x, y) as i64 + y;
            // Inner cycles by decreasing right endpoint.
            let inner: Vec<(i64, i64)> = (x + 1..y)
                .rev()
                .filter_map(|b| {
                    let a = self.base.apply(b);
                    (a < b).then_some((a, b))
                })
                .collect();
            let score = |c: (i64, i64)| self.phi_unchecked(c.0, c.1) as i64 + c.1;
            if let Some(chain) = longest_chain(&inner, target, score, |c| c.0 > x) {
                let mut out = vec![(x, y)];
                out.extend(chain);
                return Some(out);
            }
        }
        None
    }

    /// A left-inadmissible sequence `(x,y), (a_0,b_0), …, (a_k,b_k)` if one exists.
    ///
    /// Such a sequence has `x < a_0 < ⋯ < a_k < b_k < y` and
    /// `φ(a_i,b_i) − a_i + i ≥ φ(x,y) − x` for every `i`.
    pub fn left_inadmissible_witness(&self) -> Option<Vec<(i64, i64)>> {
        for (x, y) in self.base.canonical_cycles() {
            let target = self.phi_unchecked(x, y) as i64 - x;
            let inner: Vec<(i64, i64)> = (x + 1..y)
                .filter_map(|a| {
                    let b = self.base.apply(a);
                    (a < b).then_some((a, b))
                })
                .collect();
            let score = |c: (i64, i64)| self.phi_unchecked(c.0, c.1) as i64 - c.0;
            if let Some(chain) = longest_chain(&inner, target, score, |c| c.1 < y) {
                let mut out = vec![(x, y)];
                out.extend(chain);
                return Some(out);
            }
        }
        None
    }

    /// Whether no right-inadmissible sequence exists.
    pub fn is_right_admissible(&self) -> bool {
        self.right_inadmissible_witness().is_none()
    }

    /// Whether no left-inadmissible sequence exists.
    pub fn is_left_admissible(&self) -> bool {
        self.left_inadmissible_witness().is_none()
    }

    /// `(ω_R(θ), g_R(θ))`: acts on the right at the smallest descent until the
    /// weight is exhausted. With `h = g_R(θ)` the result is `h⁻¹ w h`.
    pub fn omega_right(&self) -> (AffineInvolution, AffinePermutation) {
        self.omega_right_with(|_| 0)
    }

    /// [`omega_right`](Self::omega_right) with `choose(k)` picking one of the
    /// `k` current descents. On admissible input the result does not depend
    /// on the choices.
    pub fn omega_right_with(&self, mut choose: impl FnMut(usize) -> usize) -> (AffineInvolution, AffinePermutation) {
        let mut t = self.clone();
        let mut h = AffinePermutation::identity(self.n());
        while t.weight() > 0 {
            // A periodic nondecreasing φ_R would be constant, which is
            // impossible with a left endpoint present, so a descent exists.
            let des = t.right_descents();
            let i = des[choose(des.len()).min(des.len() - 1)];
            t = t.pi_right(i);
            h = h.mul_simple_right(i);
        }
        (t.base, h)
    }

    /// `(ω_L(θ), g_L(θ))`: acts on the left at the smallest descent until the
    /// weight is exhausted. With `g = g_L(θ)⁻¹` the result is `g w g⁻¹`.
    pub fn omega_left(&self) -> (AffineInvolution, AffinePermutation) {
        self.omega_left_with(|_| 0)
    }

    /// [`omega_left`](Self::omega_left) with a caller-supplied descent choice.
    pub fn omega_left_with(&self, mut choose: impl FnMut(usize) -> usize) -> (AffineInvolution, AffinePermutation) {
        let mut t = self.clone();
        let mut g_inv = AffinePermutation::identity(self.n());
        while t.weight() > 0 {
            let des = t.left_descents();
            let i = des[choose(des.len()).min(des.len() - 1)];
            t = t.pi_left(i);
            g_inv = g_inv.mul_simple_right(i);
        }
        (t.base, g_inv)
    }

    fn max_span(&self) -> i64 {
        self.base.canonical_cycles().iter().map(|&(a, b)| b - a).max().unwrap_or(0)
    }

    /// Cycles `(x, y)` of the base with `x < p < y`.
    fn cycles_over(&self, p: i64, span: i64) -> impl Iterator<Item = (i64, i64)> + '_ {
        (p - span..p).filter_map(move |x| {
            let y = self.base.apply(x);
            (y > p).then_some((x, y))
        })
    }

    /// `λ_R(θ)` computed from the window `m + [n]`.
    pub fn lambda_right_at(&self, m: i64) -> Result<WeightedMatching> {
        let n = self.n() as i64;
        let span = self.max_span();
        let mut edges = Vec::new();
        for a in m + 1..=m + n {
            let wa = self.base.apply(a);
            if wa <= a {
                continue;
            }
            let over: Vec<(i64, i64)> = self.cycles_over(a, span).collect();
            let p = over.len() as i64;
            let q = over.iter().filter(|&&(_, y)| y < wa).count() as i64;
            let psi = self.phi_unchecked(a, wa) as i64 + wa - a - q - 1;
            if psi < 0 {
                return Err(Error::Domain(format!("negative weight in λ_R({self})")));
            }
            edges.push((a + p, psi as u64));
        }
        WeightedMatching::from_edges(self.n(), &edges)
    }

    /// `λ_L(θ)` computed from the window `m + [n]`.
    pub fn lambda_left_at(&self, m: i64) -> Result<WeightedMatching> {
        let n = self.n() as i64;
        let span = self.max_span();
        let mut edges = Vec::new();
        for a in m + 1..=m + n {
            let wa = self.base.apply(a);
            if wa >= a {
                continue;
            }
            let over: Vec<(i64, i64)> = self.cycles_over(a, span).collect();
            let p = over.len() as i64;
            let q = over.iter().filter(|&&(x, _)| wa < x).count() as i64;
            let chi = self.phi_unchecked(wa, a) as i64 + a - wa - q - 1;
            if chi < 0 {
                return Err(Error::Domain(format!("negative weight in λ_L({self})")));
            }
            edges.push((a - p - 1, chi as u64));
        }
        WeightedMatching::from_edges(self.n(), &edges)
    }

    /// `λ_R(θ)` with the default window `[n]`.
    pub fn lambda_right(&self) -> Result<WeightedMatching> {
        self.lambda_right_at(0)
    }

    /// `λ_L(θ)` with the default window `[n]`.
    pub fn lambda_left(&self) -> Result<WeightedMatching> {
        self.lambda_left_at(0)
    }

    /// The order `θ ≼ θ′`: same base and pointwise smaller weights.
    pub fn prec_leq(&self, other: &Self) -> bool {
        self.base == other.base && self.weights.iter().all(|(k, &w)| other.weights.get(k).copied().unwrap_or(0) >= w)
    }
}

/// Greedy dynamic programme over candidates in chain order: each element is
/// placed at the largest index reachable, since a larger index only makes the
/// inequality `score + index ≥ target` easier for it and every successor.
fn longest_chain(
    cands: &[(i64, i64)],
    target: i64,
    score: impl Fn((i64, i64)) -> i64,
    closes: impl Fn((i64, i64)) -> bool,
) -> Option<Vec<(i64, i64)>> {
    let mut best: Option<(i64, usize)> = None;
    let mut index = vec![None; cands.len()];
    let mut parent = vec![None; cands.len()];
    for (k, &c) in cands.iter().enumerate() {
        let (idx, par) = match best {
            Some((b, p)) => (b + 1, Some(p)),
            None => (0, None),
        };
        if score(c) + idx < target {
            continue;
        }
        index[k] = Some(idx);
        parent[k] = par;
        if closes(c) {
            let mut chain = vec![c];
            let mut cur = par;
            while let Some(p) = cur {
                chain.push(cands[p]);
                cur = parent[p];
            }
            chain.reverse();
            return Some(chain);
        }
        if best.is_none_or(|(b, _)| idx > b) {
            best = Some((idx, k));
        }
    }
    None
}

/// A weighted involution whose base is a product of commuting simple generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "MatchingRecord", into = "MatchingRecord")]
pub struct WeightedMatching(WeightedInvolution);

/// Serialized form `{"n": …, "edges": [[i, φ], …]}`.
#[derive(Serialize, Deserialize)]
struct MatchingRecord {
    n: usize,
    edges: Vec<(i64, u64)>,
}

impl TryFrom<MatchingRecord> for WeightedMatching {
    type Error = Error;
    fn try_from(r: MatchingRecord) -> Result<Self> {
        WeightedMatching::from_edges(r.n, &r.edges)
    }
}

impl From<WeightedMatching> for MatchingRecord {
    fn from(m: WeightedMatching) -> Self {
        MatchingRecord { n: m.0.n(), edges: m.edges() }
    }
}

impl fmt::Display for WeightedMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl WeightedMatching {
    /// Builds `∏ s_i` with weights on the cycles `(i, i+1)`.
    pub fn from_edges(n: usize, edges: &[(i64, u64)]) -> Result<Self> {
        if n < 2 && !edges.is_empty() {
            return Err(Error::Domain(format!("no edges for n = {n}")));
        }
        let cycles: Vec<(i64, i64)> = edges.iter().map(|&(i, _)| (i, i + 1)).collect();
        let base = AffineInvolution::from_cycles(n, &cycles)?;
        let entries: Vec<(i64, i64, u64)> = edges.iter().map(|&(i, w)| (i, i + 1, w)).collect();
        Ok(WeightedMatching(WeightedInvolution::new(base, &entries)?))
    }

    /// Checks that the base of `theta` is a matching.
    pub fn new(theta: WeightedInvolution) -> Result<Self> {
        if !theta.base().is_matching() {
            return Err(Error::Domain(format!("{} is not a product of commuting generators", theta.base())));
        }
        Ok(WeightedMatching(theta))
    }

    /// Edges `(i, φ(i, i+1))` with `i ∈ [n]`.
    pub fn edges(&self) -> Vec<(i64, u64)> {
        self.0.cycles().into_iter().map(|(a, _, w)| (a, w)).collect()
    }

    /// The underlying weighted involution.
    pub fn theta(&self) -> &WeightedInvolution {
        &self.0
    }

    /// Unwraps.
    pub fn into_theta(self) -> WeightedInvolution {
        self.0
    }
}

/// `|{k-matchings of the n-cycle}| = n/(n−k)·C(n−k, k)`.
pub fn count_matchings(n: usize, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if n < 2 || 2 * k > n {
        return 0;
    }
    let c = binomial((n - k) as u64, k as u64);
    (n as u64 * c) / (n - k) as u64
}

/// Binomial coefficient with `C(a, b) = 0` for `b > a`.
pub fn binomial(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for k in 0..b {
        r = r * (a - k) as u128 / (k + 1) as u128;
    }
    r as u64
}

/// Edge sets of matchings in the `n`-cycle, each as sorted indices in `[n]`.
pub fn matching_edge_sets(n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    if n < 2 {
        return out;
    }
    let ni = n as i64;
    fn rec(start: i64, ni: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for e in start..=ni {
            let clash = cur.iter().any(|&f| e - f == 1 || f + ni - e == 1);
            if !clash {
                cur.push(e);
                out.push(cur.clone());
                rec(e + 1, ni, cur, out);
                cur.pop();
            }
        }
    }
    rec(1, ni, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All weighted matchings of rank `n` with total weight at most `max_weight`.
pub fn enumerate_matchings(n: usize, max_weight: u64) -> Vec<WeightedMatching> {
    let mut out = Vec::new();
    for edges in matching_edge_sets(n) {
        let mut ws = vec![0u64; edges.len()];
        compositions(&mut ws, 0, max_weight, &mut |ws| {
            let e: Vec<(i64, u64)> = edges.iter().copied().zip(ws.iter().copied()).collect();
            out.push(WeightedMatching::from_edges(n, &e).expect("valid matching"));
        });
    }
    out.sort();
    out
}

/// Visits every weight vector with entries summing to at most `budget`.
pub(crate) fn compositions(ws: &mut [u64], k: usize, budget: u64, f: &mut impl FnMut(&[u64])) {
    if k == ws.len() {
        f(ws);
        return;
    }
    for w in 0..=budget {
        ws[k] = w;
        compositions(ws, k + 1, budget - w, f);
    }
    ws[k] = 0;
}

/// All weightings of `z` with total weight at most `max_weight`.
pub fn enumerate_weightings(z: &AffineInvolution, max_weight: u64) -> Vec<WeightedInvolution> {
    let cyc = z.canonical_cycles();
    let mut ws = vec![0u64; cyc.len()];
    let mut out = Vec::new();
    compositions(&mut ws, 0, max_weight, &mut |ws| {
        let e: Vec<(i64, i64, u64)> = cyc.iter().zip(ws).map(|(&(a, b), &w)| (a, b, w)).collect();
        out.push(WeightedInvolution::new(z.clone(), &e).expect("cycles of z"));
    });
    out
}

/// `α_R(z) = [a_1, b_1, …, a_l, b_l]⁻¹` over `a_i ∈ [n]` with `a_i ≤ z(a_i) = b_i`.
pub fn alpha_right(z: &AffineInvolution) -> AffinePermutation {
    let mut seq = Vec::new();
    for a in 1..=z.n() as i64 {
        let b = z.apply(a);
        if a <= b {
            seq.extend([a, b]);
        }
    }
    AffinePermutation::from_window(z.n(), &seq).expect("covers every residue").inverse()
}

/// `α_L(z) = [c_1, d_1, …, c_l, d_l]⁻¹` over `d_i ∈ [n]` with `c_i = z(d_i) ≤ d_i`.
pub fn alpha_left(z: &AffineInvolution) -> AffinePermutation {
    let mut seq = Vec::new();
    for d in 1..=z.n() as i64 {
        let c = z.apply(d);
        if c <= d {
            seq.extend([c, d]);
        }
    }
    AffinePermutation::from_window(z.n(), &seq).expect("covers every residue").inverse()
}

/// `ζ_R = ω_R ∘ * ∘ λ_R`.
pub fn zeta_right(z: &AffineInvolution) -> Result<AffineInvolution> {
    let m = WeightedInvolution::unweighted(z.clone()).lambda_right()?;
    Ok(m.theta().star().omega_right().0)
}

/// `ζ_L = ω_L ∘ * ∘ λ_L`.
pub fn zeta_left(z: &AffineInvolution) -> Result<AffineInvolution> {
    let m = WeightedInvolution::unweighted(z.clone()).lambda_left()?;
    Ok(m.theta().star().omega_left().0)
}

/// Upper covers of `z` in `≺_R`: `t_ij z t_ij` for `z(i) < i` and
/// `j = min{e > i : z(i) < z(e)}`.
pub fn prec_right_covers(z: &AffineInvolution) -> Vec<AffineInvolution> {
    let n = z.n() as i64;
    let mut out: Vec<AffineInvolution> = (1..=n)
        .filter(|&i| z.apply(i) < i)
        .map(|i| {
            let zi = z.apply(i);
            let j = (i + 1..=i + n).find(|&e| z.apply(e) > zi).expect("z(i + n) > z(i)");
            let t = AffinePermutation::reflection(z.n(), i, j).expect("j ≢ i");
            z.conjugate_by(&t).expect("same rank")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Upper covers of `z` in `≺_L`: `t_ij z t_ij` for `j < z(j)` and
/// `i = max{e < j : z(e) < z(j)}`.
pub fn prec_left_covers(z: &AffineInvolution) -> Vec<AffineInvolution> {
    let n = z.n() as i64;
    let mut out: Vec<AffineInvolution> = (1..=n)
        .filter(|&j| j < z.apply(j))
        .map(|j| {
            let zj = z.apply(j);
            let i = (j - n..j).rev().find(|&e| z.apply(e) < zj).expect("z(j − n) < z(j)");
            let t = AffinePermutation::reflection(z.n(), i, j).expect("i ≢ j");
            z.conjugate_by(&t).expect("same rank")
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Upper covers of `θ` in `≼`: one weight raised by one.
pub fn prec_covers(theta: &WeightedInvolution) -> Vec<WeightedInvolution> {
    theta
        .base()
        .canonical_cycles()
        .into_iter()
        .map(|(a, b)| {
            let mut t = theta.clone();
            *t.weights.entry((a, b)).or_insert(0) += 1;
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(n: usize, c: &[(i64, i64)]) -> AffineInvolution {
        AffineInvolution::from_cycles(n, c).unwrap()
    }

    fn theta1() -> WeightedInvolution {
        WeightedInvolution::new(inv(5, &[(1, 2), (3, 10)]), &[(1, 2, 2), (3, 10, 3)]).unwrap()
    }
    fn theta2() -> WeightedInvolution {
        WeightedInvolution::new(inv(5, &[(0, 2), (3, 11)]), &[(3, 11, 2), (5, 7, 2)]).unwrap()
    }
    fn theta3() -> WeightedInvolution {
        WeightedInvolution::new(inv(5, &[(0, 3), (2, 11)]), &[(2, 11, 2), (5, 8, 1)]).unwrap()
    }

    #[test]
    fn right_action_examples() {
        assert_eq!(theta1().pi_right(5), theta2());
        assert_eq!(theta2().pi_right(1), theta2());
        assert_eq!(theta2().pi_right(2), theta3());
    }

    #[test]
    fn left_action_examples() {
        let t2p = WeightedInvolution::new(inv(5, &[(0, 2), (3, 11)]), &[(5, 7, 1), (3, 11, 3)]).unwrap();
        assert_eq!(theta1().pi_left(5), t2p);
        assert_eq!(t2p.pi_left(2), theta3());
    }

    #[test]
    fn omega_examples() {
        let want = inv(5, &[(1, 13), (5, 9)]);
        for t in [theta1(), theta2(), theta3()] {
            let (w, h) = t.omega_right();
            assert_eq!(w, want);
            assert_eq!(h.length(), t.weight());
            assert_eq!(w.length(), t.length());
        }
    }

    #[test]
    fn lambda_example() {
        let z = WeightedInvolution::unweighted(inv(4, &[(1, 8), (2, 7)]));
        let r = z.lambda_right().unwrap();
        assert_eq!(r.edges(), vec![(1, 2), (3, 4)]);
        let l = z.lambda_left().unwrap();
        assert_eq!(l.edges(), vec![(1, 4), (3, 2)]);
    }

    #[test]
    fn inadmissible_example() {
        let t = WeightedInvolution::new(inv(4, &[(1, 4), (2, 3)]), &[(2, 3, 5)]).unwrap();
        assert_eq!(t.right_inadmissible_witness(), Some(vec![(1, 4), (2, 3)]));
        assert!(WeightedInvolution::unweighted(inv(4, &[(1, 4), (2, 3)])).is_right_admissible());
    }

    #[test]
    fn matching_counts() {
        for n in 2..=9usize {
            for k in 0..=n / 2 {
                let got = matching_edge_sets(n).iter().filter(|e| e.len() == k).count() as u64;
                assert_eq!(got, count_matchings(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn alpha_example() {
        let z = inv(4, &[(1, 8), (2, 7)]);
        assert_eq!(alpha_right(&z).window(), &[3, 5, 2, 0]);
        assert_eq!(alpha_left(&z).window(), &[5, 3, 0, 2]);
    }

    #[test]
    fn serde_round_trip() {
        let t = theta1();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"n":5,"cycles":[[1,2,2],[3,10,3]]}"#);
        assert_eq!(serde_json::from_str::<WeightedInvolution>(&s).unwrap(), t);
        let m = WeightedMatching::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[1,2],[3,4]]}"#);
    }
}
