//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by constructors, validators and enumeration drivers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A window or extended window does not describe an element of the group.
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// Two operands live in groups of different rank.
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    /// A reflection `t_ij` was requested with `i ≡ j (mod n)`.
    #[error("invalid reflection t_({i},{j}) for n = {n}")]
    InvalidReflection { n: usize, i: i64, j: i64 },

    /// The permutation is not an involution.
    #[error("not an involution: {0}")]
    NotInvolution(String),

    /// Weight data is inconsistent with the underlying involution.
    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    /// An operation received an argument outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A search or enumeration would exceed a configured bound.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: String, limit: usize },

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
