//! Natural partitions into blocks and the three-way simplicity test for
//! cyclic permutations (odd, power-of-two and mixed order).

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::genealogy::{stefan_alpha, stefan_beta, StefanVariant};
use crate::perm::{Block, Permutation};

/// Block `i` (1-based) of `{1, ..., total}` cut into `m` consecutive blocks
/// of equal size.
pub fn partition_block(total: usize, m: usize, i: usize) -> Result<Block> {
    if m == 0 || total == 0 || total % m != 0 {
        return Err(Error::NotDivisible { total, parts: m });
    }
    if i == 0 || i > m {
        return Err(Error::BadIndex { index: i, max: m });
    }
    let size = total / m;
    Block::new((i - 1) * size + 1, i * size)
}

/// Outcome of [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplicityClass {
    OddSimple(StefanVariant),
    Pow2Simple,
    /// Degree `q * 2^s` with `s >= 1` and odd `q >= 3`.
    MixedSimple {
        s: u32,
        q: usize,
    },
    NotSimple,
    NotFullCycle,
}

impl SimplicityClass {
    pub fn is_simple(self) -> bool {
        !matches!(
            self,
            SimplicityClass::NotSimple | SimplicityClass::NotFullCycle
        )
    }
}

impl fmt::Display for SimplicityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicityClass::OddSimple(v) => write!(f, "OddSimple {}", v.name()),
            SimplicityClass::Pow2Simple => f.write_str("Pow2Simple"),
            SimplicityClass::MixedSimple { s, q } => write!(f, "MixedSimple s={s} q={q}"),
            SimplicityClass::NotSimple => f.write_str("NotSimple"),
            SimplicityClass::NotFullCycle => f.write_str("NotFullCycle"),
        }
    }
}

/// Odd degree `>= 3` and equal to one of the two Stefan cycles.
pub fn is_simple_odd(p: &Permutation) -> bool {
    stefan_variant(p).is_some()
}

pub fn stefan_variant(p: &Permutation) -> Option<StefanVariant> {
    let n = p.degree();
    if n < 3 || n % 2 == 0 {
        return None;
    }
    if stefan_alpha(n).ok().as_ref() == Some(p) {
        Some(StefanVariant::Alpha)
    } else if stefan_beta(n).ok().as_ref() == Some(p) {
        Some(StefanVariant::Beta)
    } else {
        None
    }
}

/// Degree `2^k`; for `k >= 1` the two halves are exchanged and the square,
/// restricted to either half, is again simple of order `2^(k-1)`.
pub fn is_simple_pow2(p: &Permutation) -> bool {
    let n = p.degree();
    if !n.is_power_of_two() {
        return false;
    }
    if n == 1 {
        return true;
    }
    let h = n / 2;
    let lower = Block::new(1, h).expect("h >= 1");
    let upper = Block::new(h + 1, n).expect("h >= 1");
    if p.block_image(lower) != Some(upper) {
        return false;
    }
    let sq = p.power(2);
    [lower, upper].into_iter().all(|b| {
        sq.restrict_to_block(b)
            .map(|r| is_simple_pow2(&r))
            .unwrap_or(false)
    })
}

/// Block structure of a mixed-order simple cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedStructure {
    pub s: u32,
    pub q: usize,
    /// The induced permutation `σ` on the `2^s` blocks.
    pub block_perm: Permutation,
    /// Each block with the Stefan cycle that `θ^(2^s)` induces on it.
    pub restrictions: Vec<(Block, StefanVariant)>,
}

/// Splits `n = q * 2^s` with `q` odd.
pub fn dyadic_split(n: usize) -> (usize, u32) {
    let s = n.trailing_zeros();
    (n >> s, s)
}

/// The mixed-order certificate, if `p` has one.
pub fn mixed_structure(p: &Permutation) -> Option<MixedStructure> {
    let n = p.degree();
    if n == 0 {
        return None;
    }
    let (q, s) = dyadic_split(n);
    if s == 0 || q < 3 {
        return None;
    }
    let blocks = 1usize << s;
    let mut sigma = Vec::with_capacity(blocks);
    for j in 1..=blocks {
        let b = partition_block(n, blocks, j).ok()?;
        let img = p.block_image(b)?;
        // Images of aligned blocks of size q are aligned iff lo - 1 is a multiple of q.
        if (img.lo() - 1) % q != 0 {
            return None;
        }
        sigma.push((img.lo() - 1) / q + 1);
    }
    let block_perm = Permutation::from_images(sigma).ok()?;
    if !is_simple_pow2(&block_perm) {
        return None;
    }
    let pw = p.power(blocks as u64);
    let mut restrictions = Vec::with_capacity(blocks);
    for j in 1..=blocks {
        let b = partition_block(n, blocks, j).ok()?;
        let r = pw.restrict_to_block(b).ok()?;
        restrictions.push((b, stefan_variant(&r)?));
    }
    Some(MixedStructure {
        s,
        q,
        block_perm,
        restrictions,
    })
}

pub fn is_simple_mixed(p: &Permutation) -> bool {
    mixed_structure(p).is_some()
}

/// Dispatches on the degree: odd, power of two or mixed.
pub fn classify(p: &Permutation) -> SimplicityClass {
    if !p.is_full_cycle() {
        return SimplicityClass::NotFullCycle;
    }
    let n = p.degree();
    if n.is_power_of_two() {
        if is_simple_pow2(p) {
            return SimplicityClass::Pow2Simple;
        }
    } else if n % 2 == 1 {
        if let Some(v) = stefan_variant(p) {
            return SimplicityClass::OddSimple(v);
        }
    } else if let Some(m) = mixed_structure(p) {
        return SimplicityClass::MixedSimple { s: m.s, q: m.q };
    }
    SimplicityClass::NotSimple
}
