//! Combinatorics of involutions in affine symmetric groups.

pub mod atoms;
pub mod bruhat_inv;
pub mod error;
pub mod genfunc;
pub mod involution;
pub mod io;
pub mod perm;
pub mod render;
pub mod verify;
pub mod weighted;

pub use error::{Error, Result};
pub use involution::AffineInvolution;
pub use perm::{AffinePermutation, Reflection};
