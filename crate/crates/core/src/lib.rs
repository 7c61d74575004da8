//! Word calculi, greedy containment and Wilf-equivalence censuses for two
//! permutation classes:
//!
//! - the X-class `Av(2143, 2413, 3142, 3412)`, whose members are coded by
//!   alternating-sign words of pair letters ending in a monotone letter
//!   ([`xclass`]);
//! - `SIO`, the sum closure of the increasing oscillation, whose members are
//!   words over the zigzag alphabet `a, b, w_k, m_k` ([`sio`]).
//!
//! Every greedy containment test in this crate is paired with the
//! backtracking oracle in [`perm`], and every generating function is an
//! exact truncated power series ([`series`]). The [`census`] module groups
//! patterns by their avoidance counts and by the structural equivalence
//! rules of each class.

pub mod census;
pub mod cli;
mod error;
pub mod perm;
pub mod series;
pub mod sio;
pub mod xclass;

pub use error::{Error, Result};
pub use perm::{Permutation, Symmetry};
pub use series::Series;
pub use sio::{SioLetter, SioWord, TypeMark};
pub use xclass::{WilfKey, XLetter, XWord};
