//! Power-of-two branches built by pasting, and the doubling/halving
//! operators that move between consecutive levels.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::paste::{left_paste, reverse_perm};
use crate::perm::Permutation;

/// The two explicit power-of-two branches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pow2Family {
    /// `θ_n = e_{n/2} |◇ θ_{n/2}`
    Theta,
    /// `φ_n = ẽ_{n/2} |◇ φ̃_{n/2}`
    Phi,
}

/// `θ*(2k) = 2θ(k)`, `θ*(2k - 1) = 2θ(k) - 1`.
pub fn star(p: &Permutation) -> Permutation {
    let images = p
        .images()
        .iter()
        .flat_map(|&x| [2 * x - 1, 2 * x])
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `θ_*(k) = ⌊(θ(2k) + 1) / 2⌋`.
///
/// Only a permutation when `p` maps the pairs `{2k-1, 2k}` onto pairs, as
/// every simple cycle of order `2^n` does; other inputs are rejected.
pub fn substar(p: &Permutation) -> Result<Permutation> {
    let n = p.degree();
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    let images: Vec<usize> = (1..=n / 2).map(|k| (p.apply(2 * k) + 1) / 2).collect();
    Permutation::from_images(images)
}

/// `θ_n` or `φ_n` for `n = 2^k`, with `θ_1 = φ_1 = (1)`.
pub fn pow2_branch(family: Pow2Family, order: usize) -> Result<Permutation> {
    if !order.is_power_of_two() {
        return Err(Error::BadDegree(order));
    }
    let mut current = Permutation::identity(1);
    let mut n = 1;
    while n < order {
        let e = Permutation::identity(n);
        current = match family {
            Pow2Family::Theta => left_paste(&e, &current),
            Pow2Family::Phi => left_paste(&reverse_perm(&e), &reverse_perm(&current)),
        };
        n *= 2;
    }
    Ok(current)
}

/// `ρ_{s_1} ∘ ρ_{s_2} ∘ ...` in `S_n`.
pub fn transposition_product(
    indices: impl IntoIterator<Item = usize>,
    n: usize,
) -> Result<Permutation> {
    let mut acc = Permutation::identity(n);
    for s in indices {
        acc = acc.compose(&Permutation::transposition_rho(s, n)?)?;
    }
    Ok(acc)
}
