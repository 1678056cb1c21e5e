//! Exact permutation algebra on `{1, ..., n}`.
//!
//! A [`Permutation`] stores its image sequence: position `i` (1-based) holds
//! `θ(i)`. Composition follows the usual right-to-left convention,
//! `(a ∘ b)(x) = a(b(x))`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1, ..., n}` with `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line image sequence.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotABijection { degree: n });
            }
            seen[x - 1] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    /// The identity `e_n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "identity requires n >= 1");
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `ρ_s` of `S_n` swapping `2s - 1` and `2s`.
    pub fn transposition_rho(s: usize, n: usize) -> Result<Self> {
        if s == 0 || 2 * s > n {
            return Err(Error::OutOfRange {
                index: 2 * s,
                degree: n,
            });
        }
        let mut p = Self::identity(n);
        p.images.swap(2 * s - 2, 2 * s - 1);
        Ok(p)
    }

    /// Builds a permutation of degree `n` from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[CycleForm]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            let e = c.elements();
            for (idx, &x) in e.iter().enumerate() {
                if x > n {
                    return Err(Error::OutOfRange {
                        index: x,
                        degree: n,
                    });
                }
                if touched[x - 1] {
                    return Err(Error::NotDisjoint);
                }
                touched[x - 1] = true;
                images[x - 1] = e[(idx + 1) % e.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// `θ(x)` for `1 <= x <= n`.
    ///
    /// # Panics
    ///
    /// Panics if `x` is outside `1..=n`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    /// `k`-fold composition, by repeated squaring.
    pub fn power(&self, mut k: u64) -> Self {
        let mut result = Self::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = base.compose_same(&result);
            }
            base = base.compose_same(&base);
            k >>= 1;
        }
        result
    }

    fn compose_same(&self, other: &Self) -> Self {
        Self {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        }
    }

    /// Disjoint cycles in canonical rotation, sorted by minimum, fixed
    /// points included as 1-cycles.
    pub fn cycles(&self) -> Vec<CycleForm> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut elements = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                elements.push(x);
                x = self.apply(x);
            }
            // `start` is the smallest unvisited point, hence the minimum.
            out.push(CycleForm { elements });
        }
        out
    }

    pub fn is_full_cycle(&self) -> bool {
        let n = self.degree();
        let mut x = self.apply(1);
        let mut len = 1;
        while x != 1 {
            x = self.apply(x);
            len += 1;
        }
        len == n
    }

    /// The permutation induced on a block mapped onto itself, relabelled to
    /// `{1, ..., hi - lo + 1}`.
    pub fn restrict_to_block(&self, block: Block) -> Result<Self> {
        if block.hi > self.degree() {
            return Err(Error::OutOfRange {
                index: block.hi,
                degree: self.degree(),
            });
        }
        let images: Vec<usize> = (block.lo..=block.hi).map(|x| self.apply(x)).collect();
        if images.iter().any(|&y| !block.contains(y)) {
            return Err(Error::NotInvariant {
                lo: block.lo,
                hi: block.hi,
            });
        }
        Ok(Self {
            images: images.into_iter().map(|y| y - block.lo + 1).collect(),
        })
    }

    /// Image of a block as a set, if it is again a contiguous block.
    pub fn block_image(&self, block: Block) -> Option<Block> {
        let (mut lo, mut hi) = (usize::MAX, 0);
        for x in block.lo..=block.hi {
            let y = self.apply(x);
            lo = lo.min(y);
            hi = hi.max(y);
        }
        // A bijection sends `len` distinct points into [lo, hi]; they fill it
        // exactly when the span equals the length.
        (hi - lo + 1 == block.len()).then_some(Block { lo, hi })
    }

    /// Cycle notation including fixed points, e.g. `(1,6,3,5,2,4)(7)`.
    pub fn to_cycle_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for c in self.cycles() {
            let _ = write!(s, "{c}");
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Accepts one-line form `6,4,5,1,2,3` or cycle form `(1,6,3)(2,4)(5)`.
/// In cycle form the degree is the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('(') {
            let cycles = parse_cycles(s)?;
            let n = cycles
                .iter()
                .flat_map(|c| c.elements().iter().copied())
                .max()
                .ok_or(Error::Parse("empty cycle notation"))?;
            Self::from_cycles(n, &cycles)
        } else {
            Self::from_images(parse_list(s)?)
        }
    }
}

/// A single cycle `(i_1, ..., i_q)` rotated so that `i_1` is its minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleForm {
    elements: Vec<usize>,
}

impl CycleForm {
    /// Canonicalises the rotation; rejects empty input, zero and repeats.
    pub fn new(mut elements: Vec<usize>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidCycle("empty"));
        }
        if elements.contains(&0) {
            return Err(Error::InvalidCycle("points are 1-based"));
        }
        let mut sorted = elements.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCycle("repeated point"));
        }
        let pos = elements
            .iter()
            .enumerate()
            .min_by_key(|&(_, &x)| x)
            .map(|(i, _)| i)
            .unwrap_or(0);
        elements.rotate_left(pos);
        Ok(Self { elements })
    }

    pub(crate) fn from_canonical(elements: Vec<usize>) -> Self {
        Self { elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.elements)?;
        f.write_str(")")
    }
}

impl fmt::Debug for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cycles = parse_cycles(s.trim())?;
        if cycles.len() != 1 {
            return Err(Error::Parse("expected exactly one cycle"));
        }
        Ok(cycles.remove(0))
    }
}

/// The contiguous set `{lo, ..., hi}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Block {
    lo: usize,
    hi: usize,
}

impl Block {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || lo > hi {
            return Err(Error::InvalidBlock { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}..{}}}", self.lo, self.hi)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::Parse("empty permutation"));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse("expected comma-separated positive integers"))
        })
        .collect()
}

fn parse_cycles(s: &str) -> Result<Vec<CycleForm>> {
    let mut out = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or(Error::Parse("expected '('"))?;
        let close = body
            .find(')')
            .ok_or(Error::Parse("unbalanced parenthesis"))?;
        out.push(CycleForm::new(parse_list(&body[..close])?)?);
        rest = body[close + 1..].trim_start();
    }
    if out.is_empty() {
        return Err(Error::Parse("empty cycle notation"));
    }
    Ok(out)
}
