//! Generating functions counting involutions by length and absolute length.
//!
//! `Ĩ_n(q, x) = Σ_z q^{ℓ(z)} x^{ℓ′(z)}` has the closed form
//! `Σ_k n/(n−k)·C(n−k, k)·(qx/(1−q²))^k`. Series here are truncated in `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::involution::Involutions;
use crate::weighted::{binomial, count_matchings};

/// A polynomial in `q` and `x`, truncated above `q^cap`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    cap: u32,
    /// `(q-degree, x-degree) ↦ coefficient`; zero coefficients are dropped.
    coeffs: BTreeMap<(u32, u32), i128>,
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        }
        for (k, (&(d, e), &c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·q^{d}·x^{e}")?;
        }
        write!(f, " + O(q^{})", self.cap + 1)
    }
}

impl TruncatedSeries {
    /// The zero series.
    pub fn zero(cap: u32) -> Self {
        TruncatedSeries { cap, coeffs: BTreeMap::new() }
    }

    /// `c·q^d·x^e`, or zero if `d > cap`.
    pub fn monomial(cap: u32, c: i128, d: u32, e: u32) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(d, e, c);
        s
    }

    /// The constant `c`.
    pub fn constant(cap: u32, c: i128) -> Self {
        Self::monomial(cap, c, 0, 0)
    }

    /// Truncation degree in `q`.
    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Adds `c·q^d·x^e` in place.
    pub fn add_term(&mut self, d: u32, e: u32, c: i128) {
        if d > self.cap || c == 0 {
            return;
        }
        let slot = self.coeffs.entry((d, e)).or_insert(0);
        *slot = slot.checked_add(c).expect("coefficient overflow");
        if *slot == 0 {
            self.coeffs.remove(&(d, e));
        }
    }

    /// Coefficient of `q^d x^e`.
    pub fn coeff(&self, d: u32, e: u32) -> i128 {
        self.coeffs.get(&(d, e)).copied().unwrap_or(0)
    }

    /// Coefficient of `q^d` after setting `x = 1`.
    pub fn coeff_q(&self, d: u32) -> i128 {
        self.coeffs.range((d, 0)..=(d, u32::MAX)).map(|(_, &c)| c).sum()
    }

    /// Nonzero terms `((d, e), c)` in order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i128)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// `1 / (1 − q·u)` style geometric inverse of `1 + a` where `a` has no
    /// constant term.
    pub fn inverse_one_plus(a: &Self) -> Self {
        assert_eq!(a.coeff(0, 0), 0, "argument must vanish at q = 0");
        let cap = a.cap;
        let mut out = Self::constant(cap, 1);
        let mut power = Self::constant(cap, 1);
        for _ in 0..cap {
            power = &power * &(-a);
            out = &out + &power;
        }
        out
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(self.cap, 1), |acc, _| &acc * self)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.cap.min(rhs.cap));
        for (&(d, e), &c) in self.coeffs.iter().chain(rhs.coeffs.iter()) {
            out.add_term(d, e, c);
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { cap: self.cap, coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let cap = self.cap.min(rhs.cap);
        let mut out = TruncatedSeries::zero(cap);
        for (&(d1, e1), &c1) in &self.coeffs {
            for (&(d2, e2), &c2) in &rhs.coeffs {
                if d1 + d2 <= cap {
                    out.add_term(d1 + d2, e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
                }
            }
        }
        out
    }
}

/// `qx / (1 − q²)` truncated at `cap`.
fn u_series(cap: u32) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(cap);
    let mut d = 1;
    while d <= cap {
        s.add_term(d, 1, 1);
        d += 2;
    }
    s
}

/// The closed form of `Ĩ_n(q, x)` up to `q^cap`.
pub fn series_closed_form(n: usize, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(cap);
    for k in 0..=n / 2 {
        let c = count_matchings(n, k) as i128;
        for (&(d, e), &v) in &u_series(cap).pow(k as u32).coeffs {
            out.add_term(d, e, c * v);
        }
    }
    out
}

/// `Ĩ_n(q, x)` up to `q^cap` by enumerating involutions.
pub fn series_bruteforce(n: usize, cap: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(cap);
    // ℓ̂ ≤ ℓ, so every involution with ℓ ≤ cap has ℓ̂ ≤ cap.
    for z in Involutions::new(n, cap as u64) {
        let l = z.length();
        if l <= cap as u64 {
            out.add_term(l as u32, z.absolute_length() as u32, 1);
        }
    }
    out
}

/// `Ĩ_n − Ĩ_{n−1} − (qx/(1−q²))·Ĩ_{n−2}`, which vanishes for `n ≥ 3`.
pub fn recurrence_residual(n: usize, cap: u32) -> TruncatedSeries {
    assert!(n >= 3, "the recurrence starts at n = 3");
    let lhs = series_closed_form(n, cap);
    let rhs = &series_closed_form(n - 1, cap) + &(&u_series(cap) * &series_closed_form(n - 2, cap));
    &lhs - &rhs
}

/// `(1+q)^{−n}·Luc_n(1+q, qx(1+q)/(1−q))`, where `Luc_0 = 2`, `Luc_1 = x` and
/// `Luc_n = x·Luc_{n−1} + s·Luc_{n−2}`.
pub fn lucas_form(n: usize, cap: u32) -> TruncatedSeries {
    let one_q = &TruncatedSeries::constant(cap, 1) + &TruncatedSeries::monomial(cap, 1, 1, 0);
    let geometric = {
        let mut g = TruncatedSeries::zero(cap);
        for d in 0..=cap {
            g.add_term(d, 0, 1);
        }
        g
    };
    let s = &(&TruncatedSeries::monomial(cap, 1, 1, 1) * &one_q) * &geometric;
    let mut prev = TruncatedSeries::constant(cap, 2);
    let mut cur = one_q.clone();
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = &(&one_q * &cur) + &(&s * &prev);
        prev = cur;
        cur = next;
    }
    let inv = TruncatedSeries::inverse_one_plus(&TruncatedSeries::monomial(cap, 1, 1, 0));
    &inv.pow(n as u32) * &cur
}

/// Whether the three-term recurrence holds through degree `cap`; needs `n ≥ 3`.
pub fn recurrence_holds(n: usize, cap: u32) -> bool {
    n >= 3 && recurrence_residual(n, cap).terms().next().is_none()
}

/// Whether the closed form equals the Lucas form through degree `cap`.
pub fn lucas_identity_holds(n: usize, cap: u32) -> bool {
    lucas_form(n, cap) == series_closed_form(n, cap)
}

/// `N_n(m)`: involutions of rank `n` with `ℓ = m`.
pub fn count_n(n: usize, m: u64) -> u64 {
    if m == 0 {
        return 1;
    }
    (1..=n / 2)
        .filter(|&j| (j as u64) <= m && (m - j as u64).is_multiple_of(2))
        .map(|j| count_matchings(n, j) * binomial((j as u64 + m) / 2 - 1, j as u64 - 1))
        .sum()
}

/// `N̂_n(m)`: involutions of rank `n` with `ℓ̂ = m`.
pub fn count_nhat(n: usize, m: u64) -> u64 {
    if m == 0 {
        return 1;
    }
    (1..=n / 2).map(|j| count_matchings(n, j) * binomial(m - 1, j as u64 - 1)).sum()
}

/// Number of involutions with `ℓ = m` and `ℓ′ = k`.
pub fn count_by_length(n: usize, m: u64, k: u64) -> u64 {
    if k == 0 {
        return (m == 0) as u64;
    }
    if m < k || !(m - k).is_multiple_of(2) {
        return 0;
    }
    count_matchings(n, k as usize) * binomial((m + k) / 2 - 1, k - 1)
}

/// Number of involutions with `ℓ̂ = m` and `ℓ′ = k`.
pub fn count_by_hat(n: usize, m: u64, k: u64) -> u64 {
    if 2 * m < k {
        return 0;
    }
    count_by_length(n, 2 * m - k, k)
}

/// One row of the counts table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub m: u64,
    pub k: u64,
    /// Involutions with `ℓ = m`, `ℓ′ = k`.
    pub n_len: u64,
    /// Involutions with `ℓ̂ = m`, `ℓ′ = k`.
    pub n_hat: u64,
}

/// Rows `(n, m, k, N, N̂)` for `m ≤ max_m` and `0 ≤ k ≤ ⌊n/2⌋`.
pub fn count_rows(n: usize, max_m: u64) -> Vec<CountRow> {
    let mut rows = Vec::new();
    for m in 0..=max_m {
        for k in 0..=(n / 2) as u64 {
            rows.push(CountRow { n, m, k, n_len: count_by_length(n, m, k), n_hat: count_by_hat(n, m, k) });
        }
    }
    rows
}

/// CSV rendering of [`count_rows`] with header `n,m,k,N,Nhat`.
pub fn counts_csv(n: usize, max_m: u64) -> String {
    let mut s = String::from("n,m,k,N,Nhat\n");
    for r in count_rows(n, max_m) {
        s.push_str(&format!("{},{},{},{},{}\n", r.n, r.m, r.k, r.n_len, r.n_hat));
    }
    s
}
