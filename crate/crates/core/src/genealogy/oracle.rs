//! Exhaustive search over full cycles, used to cross-check the
//! constructive enumerations.

use alloc::vec::Vec;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::simplicity::classify;

/// Largest order accepted by [`brute_force_sim`]: `9! = 362 880` candidates.
pub const BRUTE_FORCE_CAP: usize = 10;

/// Every `n`-cycle written as `(1, c_2, ..., c_n)`, in no particular order.
pub fn full_cycles(n: usize) -> impl Iterator<Item = Permutation> {
    (2..=n).permutations(n.saturating_sub(1)).map(move |rest| {
        let mut images = alloc::vec![0usize; n];
        let mut prev = 1;
        for &x in &rest {
            images[prev - 1] = x;
            prev = x;
        }
        images[prev - 1] = 1;
        Permutation::from_images_unchecked(images)
    })
}

/// All simple cycles of the given order, sorted by one-line images.
pub fn brute_force_sim(order: usize) -> Result<Vec<Permutation>> {
    if order == 0 {
        return Err(Error::EmptyPermutation);
    }
    if order > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge {
            order,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let mut out: Vec<Permutation> = full_cycles(order)
        .filter(|p| classify(p).is_simple())
        .collect();
    out.sort();
    Ok(out)
}
