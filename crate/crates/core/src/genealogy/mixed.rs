//! Simple cycles of order `4n + 2`.
//!
//! Every such cycle exchanges the two halves of `{1, ..., 4n+2}` and its
//! square is `X ◇| Y` for Stefan cycles `X, Y` of order `2n + 1`. Given the
//! square, the cycle is fixed by the choice of `θ(1)` in the upper half.

use alloc::vec;
use alloc::vec::Vec;

use super::stefan::StefanVariant;
use crate::error::{Error, Result};
use crate::paste::{left_paste, right_paste};
use crate::perm::Permutation;

/// The four explicit branches of order `4n + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedFamily {
    /// `α_{2n+1} |◇ e_{2n+1}`
    Theta,
    /// `e_{2n+1} |◇ α_{2n+1}`
    Eta,
    /// `β_{2n+1} |◇ e_{2n+1}`
    Phi,
    /// `e_{2n+1} |◇ β_{2n+1}`
    Varphi,
}

pub fn mixed_branch(family: MixedFamily, order: usize) -> Result<Permutation> {
    if order < 6 || order % 4 != 2 {
        return Err(Error::BadDegree(order));
    }
    let m = order / 2;
    let e = Permutation::identity(m);
    Ok(match family {
        MixedFamily::Theta => left_paste(&StefanVariant::Alpha.build(m)?, &e),
        MixedFamily::Eta => left_paste(&e, &StefanVariant::Alpha.build(m)?),
        MixedFamily::Phi => left_paste(&StefanVariant::Beta.build(m)?, &e),
        MixedFamily::Varphi => left_paste(&e, &StefanVariant::Beta.build(m)?),
    })
}

/// Names the square `left_{2n+1} ◇| right_{2n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SquareSpec {
    pub left: StefanVariant,
    pub right: StefanVariant,
    /// Odd part is `2n + 1`; must be at least 1.
    pub n: usize,
}

impl SquareSpec {
    /// Enumeration order: αα, ββ, αβ, βα.
    pub const BRANCHES: [(StefanVariant, StefanVariant); 4] = [
        (StefanVariant::Alpha, StefanVariant::Alpha),
        (StefanVariant::Beta, StefanVariant::Beta),
        (StefanVariant::Alpha, StefanVariant::Beta),
        (StefanVariant::Beta, StefanVariant::Alpha),
    ];

    pub fn new(left: StefanVariant, right: StefanVariant, n: usize) -> Self {
        Self { left, right, n }
    }

    pub fn order(&self) -> usize {
        4 * self.n + 2
    }
}

pub fn square_spec(spec: SquareSpec) -> Result<Permutation> {
    let m = 2 * spec.n + 1;
    Ok(right_paste(&spec.left.build(m)?, &spec.right.build(m)?))
}

/// The half-exchanging square root `θ` of `square` with `θ(1) = i`.
///
/// `θ` commutes with its square, so `θ(S^t(1)) = S^t(i)` and
/// `θ(S^t(i)) = S^(t+1)(1)`; walking both orbits fills in every image.
pub fn square_root_with(square: &Permutation, i: usize) -> Result<Permutation> {
    let n = square.degree();
    if n < 2 || n % 2 == 1 {
        return Err(Error::BadDegree(n));
    }
    let h = n / 2;
    if i <= h || i > n {
        return Err(Error::BadIndex { index: i, max: n });
    }
    let mut images = vec![0usize; n];
    let mut assign = |x: usize, y: usize| -> Result<()> {
        match images[x - 1] {
            0 => {
                images[x - 1] = y;
                Ok(())
            }
            prev if prev == y => Ok(()),
            _ => Err(Error::ChaseFailure),
        }
    };
    let (mut a, mut b) = (1, i);
    for _ in 0..h {
        assign(a, b)?;
        assign(b, square.apply(a))?;
        a = square.apply(a);
        b = square.apply(b);
    }
    if images.contains(&0) {
        return Err(Error::ChaseFailure);
    }
    let theta = Permutation::from_images(images).map_err(|_| Error::ChaseFailure)?;
    if !theta.is_full_cycle() || theta.power(2) != *square {
        return Err(Error::ChaseFailure);
    }
    Ok(theta)
}

/// All `8n + 4` simple cycles of order `4n + 2`, grouped by square
/// (αα, ββ, αβ, βα) and then by ascending `θ(1)`.
pub fn enumerate_sim_4n2(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::BadDegree(2));
    }
    let order = 4 * n + 2;
    let mut out = Vec::with_capacity(8 * n + 4);
    for (left, right) in SquareSpec::BRANCHES {
        let square = square_spec(SquareSpec::new(left, right, n))?;
        for i in order / 2 + 1..=order {
            out.push(square_root_with(&square, i)?);
        }
    }
    Ok(out)
}
