//! Pasting and Reversing of cycles and permutations.
//!
//! Cycle operators act on [`CycleForm`]s; permutation operators act on
//! one-line images. Pasting of permutations is written `|◇` (left) and
//! `◇|` (right).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{CycleForm, Permutation};

/// `u ◇ v`: concatenates the element sequences of two disjoint cycles.
///
/// `u` must carry the smaller minimum so the result is again canonical.
pub fn paste_cycles(u: &CycleForm, v: &CycleForm) -> Result<CycleForm> {
    if u.elements().iter().any(|x| v.elements().contains(x)) {
        return Err(Error::NotDisjoint);
    }
    if v.min() < u.min() {
        return Err(Error::BadOrdering);
    }
    let mut elements = Vec::with_capacity(u.len() + v.len());
    elements.extend_from_slice(u.elements());
    elements.extend_from_slice(v.elements());
    Ok(CycleForm::from_canonical(elements))
}

/// `(i_1, i_2, ..., i_q) ↦ (i_1, i_q, ..., i_2)`.
pub fn reverse_cycle(u: &CycleForm) -> CycleForm {
    let e = u.elements();
    let mut elements = Vec::with_capacity(e.len());
    elements.push(e[0]);
    elements.extend(e[1..].iter().rev());
    CycleForm::from_canonical(elements)
}

/// `a |◇ b`: the first `m` images are `a(i) + n`, the last `n` are `b(i)`.
pub fn left_paste(a: &Permutation, b: &Permutation) -> Permutation {
    let n = b.degree();
    let images = a
        .images()
        .iter()
        .map(|&x| x + n)
        .chain(b.images().iter().copied())
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `a ◇| b`: the first `m` images are `a(i)`, the last `n` are `b(i) + m`.
pub fn right_paste(a: &Permutation, b: &Permutation) -> Permutation {
    let m = a.degree();
    let images = a
        .images()
        .iter()
        .copied()
        .chain(b.images().iter().map(|&x| x + m))
        .collect();
    Permutation::from_images_unchecked(images)
}

/// `ã(k) = a(m + 1 - k)`: the image sequence read backwards.
pub fn reverse_perm(a: &Permutation) -> Permutation {
    let mut images = a.images().to_vec();
    images.reverse();
    Permutation::from_images_unchecked(images)
}
