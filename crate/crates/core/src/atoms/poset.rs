//! The atom poset of an involution, its lattice test and Möbius function.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{alpha_max, alpha_min, atom_covers_up, rank_a};
use crate::error::Result;
use crate::involution::AffineInvolution;
use crate::perm::AffinePermutation;

/// Atoms of `z` ordered by `(rank, window)` with their cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomPoset {
    pub z: AffineInvolution,
    pub atoms: Vec<AffinePermutation>,
    /// Pairs `(u, v)` of indices into `atoms` with `atoms[u] ⋖_A atoms[v]`.
    pub covers: Vec<(usize, usize)>,
    pub ranks: Vec<u64>,
}

/// JSON export shape.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetRecord {
    pub n: usize,
    pub z: Vec<i64>,
    pub atoms: Vec<Vec<i64>>,
    pub covers: Vec<(usize, usize)>,
    pub ranks: Vec<u64>,
}

/// Generates `A(z)` upward from `α_min(z)` along `⋖_A`.
pub fn atom_poset(z: &AffineInvolution) -> Result<AtomPoset> {
    let bottom = alpha_min(z);
    let mut seen: BTreeSet<AffinePermutation> = BTreeSet::new();
    let mut queue = VecDeque::from([bottom.clone()]);
    seen.insert(bottom);
    let mut edges = Vec::new();
    while let Some(u) = queue.pop_front() {
        for v in atom_covers_up(&u) {
            edges.push((u.clone(), v.clone()));
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut keyed = Vec::with_capacity(seen.len());
    for w in seen {
        keyed.push((rank_a(&w, z)?, w));
    }
    keyed.sort();
    let index: BTreeMap<&AffinePermutation, usize> = keyed.iter().enumerate().map(|(k, (_, w))| (w, k)).collect();
    let mut covers: Vec<(usize, usize)> = edges.iter().map(|(u, v)| (index[u], index[v])).collect();
    covers.sort();
    covers.dedup();
    let ranks = keyed.iter().map(|(r, _)| *r).collect();
    let atoms = keyed.iter().map(|(_, w)| w.clone()).collect();
    Ok(AtomPoset { z: z.clone(), atoms, covers, ranks })
}

impl AtomPoset {
    /// Number of atoms.
    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    /// Whether there are no atoms (never the case for a valid involution).
    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Index of the unique minimal element, if there is one.
    pub fn bottom(&self) -> Option<usize> {
        let mins: Vec<usize> = (0..self.len()).filter(|&k| !self.covers.iter().any(|&(_, v)| v == k)).collect();
        (mins.len() == 1).then(|| mins[0])
    }

    /// Index of the unique maximal element, if there is one.
    pub fn top(&self) -> Option<usize> {
        let maxs: Vec<usize> = (0..self.len()).filter(|&k| !self.covers.iter().any(|&(u, _)| u == k)).collect();
        (maxs.len() == 1).then(|| maxs[0])
    }

    /// Whether the generated extremes agree with `α_min(z)` and `α_max(z)`.
    pub fn extremes_match(&self) -> bool {
        self.bottom().map(|b| self.atoms[b] == alpha_min(&self.z)).unwrap_or(false)
            && self.top().map(|t| self.atoms[t] == alpha_max(&self.z)).unwrap_or(false)
    }

    /// Number of atoms of each rank.
    pub fn level_sizes(&self) -> Vec<usize> {
        let top = self.ranks.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![0; top + 1];
        for &r in &self.ranks {
            out[r as usize] += 1;
        }
        out
    }

    /// Whether every cover raises the rank by exactly one.
    pub fn is_graded_by_rank(&self) -> bool {
        self.covers.iter().all(|&(u, v)| self.ranks[v] == self.ranks[u] + 1)
    }

    /// `leq[u][v]` iff `atoms[u] ≤ atoms[v]`.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        let m = self.len();
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); m];
        for &(u, v) in &self.covers {
            up[u].push(v);
        }
        let mut leq = vec![vec![false; m]; m];
        // Atoms are sorted by rank, so processing in reverse sees covers first.
        for u in (0..m).rev() {
            leq[u][u] = true;
            for &v in &up[u] {
                let above = leq[v].clone();
                for (slot, reach) in leq[u].iter_mut().zip(above) {
                    *slot |= reach;
                }
            }
        }
        leq
    }

    /// Whether every pair has a join and a meet.
    pub fn is_lattice(&self) -> bool {
        let leq = self.order_matrix();
        let m = self.len();
        let bound = |x: usize, y: usize, upper: bool| -> bool {
            let cands: Vec<usize> =
                (0..m).filter(|&c| if upper { leq[x][c] && leq[y][c] } else { leq[c][x] && leq[c][y] }).collect();
            cands.iter().any(|&c| cands.iter().all(|&d| if upper { leq[c][d] } else { leq[d][c] }))
        };
        (0..m).all(|x| (x..m).all(|y| bound(x, y, true) && bound(x, y, false)))
    }

    /// Möbius function `μ(x, y)` for all `x ≤ y`, keyed by index pairs.
    pub fn mobius(&self) -> BTreeMap<(usize, usize), i64> {
        let leq = self.order_matrix();
        let m = self.len();
        let mut mu = BTreeMap::new();
        for x in 0..m {
            // Elements above x in rank order, so every proper lower interval
            // is finished before it is needed.
            for y in x..m {
                if !leq[x][y] {
                    continue;
                }
                let v = if x == y {
                    1
                } else {
                    -(x..y).filter(|&c| leq[x][c] && leq[c][y] && c != y).map(|c| mu[&(x, c)]).sum::<i64>()
                };
                mu.insert((x, y), v);
            }
        }
        mu
    }

    /// The distinct values taken by the Möbius function.
    pub fn mobius_values(&self) -> BTreeSet<i64> {
        self.mobius().values().copied().collect()
    }

    /// Export shape for JSON.
    pub fn record(&self) -> PosetRecord {
        PosetRecord {
            n: self.z.n(),
            z: self.z.window().to_vec(),
            atoms: self.atoms.iter().map(|w| w.window().to_vec()).collect(),
            covers: self.covers.clone(),
            ranks: self.ranks.clone(),
        }
    }

    /// Graphviz rendering with one row per rank.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph atoms {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=plaintext];");
        for (k, w) in self.atoms.iter().enumerate() {
            let _ = writeln!(s, "  a{k} [label=\"{w}\"];");
        }
        for (r, _) in self.level_sizes().iter().enumerate() {
            let ids: Vec<String> =
                (0..self.len()).filter(|&k| self.ranks[k] == r as u64).map(|k| format!("a{k}")).collect();
            let _ = writeln!(s, "  {{ rank=same; {}; }}", ids.join("; "));
        }
        for &(u, v) in &self.covers {
            let _ = writeln!(s, "  a{u} -> a{v};");
        }
        s.push_str("}\n");
        s
    }
}
