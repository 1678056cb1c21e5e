//! Simple cyclic permutations: construction, recognition, genealogy and the
//! periods forced by their primitive interval maps.
//!
//! Permutations are stored in one-line notation with 1-based images and
//! compose right-to-left, `(a ∘ b)(x) = a(b(x))`.
//!
//! ```
//! use simperm_core::{classify, Permutation, SimplicityClass};
//!
//! let p: Permutation = "3,4,2,1".parse().unwrap();
//! assert_eq!(classify(&p), SimplicityClass::Pow2Simple);
//! ```

#![no_std]

extern crate alloc;

pub mod dynamics;
pub mod error;
pub mod genealogy;
pub mod paste;
pub mod perm;
pub mod simplicity;

pub use dynamics::{forces_period, markov_graph, primitive_function, MarkovGraph, Rational};
pub use error::{Error, Result};
pub use genealogy::BranchFamily;
pub use paste::{left_paste, paste_cycles, reverse_cycle, reverse_perm, right_paste};
pub use perm::{Block, CycleForm, Permutation};
pub use simplicity::{classify, SimplicityClass};
