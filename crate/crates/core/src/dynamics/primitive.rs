use alloc::vec::Vec;
use num_traits::One;

use super::Rational;
use crate::error::{Error, Result};
use crate::perm::{Block, Permutation};

/// `x ↦ slope * x + intercept` on one unit interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineBranch {
    pub slope: i64,
    pub intercept: i64,
}

impl AffineBranch {
    pub fn eval(&self, x: Rational) -> Rational {
        x * Rational::from(self.slope as i128) + Rational::from(self.intercept as i128)
    }

    /// Preimage of `y`; branches of a permutation never have slope 0.
    pub fn solve(&self, y: Rational) -> Rational {
        (y - Rational::from(self.intercept as i128)) / Rational::from(self.slope as i128)
    }
}

/// The piecewise-linear interpolation of a permutation on the nodes
/// `1, ..., n`, constant outside `[1, n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseLinearMap {
    values: Vec<usize>,
    branches: Vec<AffineBranch>,
}

impl PiecewiseLinearMap {
    pub fn new(p: &Permutation) -> Result<Self> {
        let values = p.images().to_vec();
        if values.len() < 2 {
            return Err(Error::DegreeTooSmall(values.len()));
        }
        let branches = values
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                let k = (i + 1) as i64;
                let slope = w[1] as i64 - w[0] as i64;
                AffineBranch {
                    slope,
                    intercept: w[0] as i64 - slope * k,
                }
            })
            .collect();
        Ok(Self { values, branches })
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// Branches `1..=n-1`, branch `k` living on `J_k = [k, k+1]`.
    pub fn branches(&self) -> &[AffineBranch] {
        &self.branches
    }

    pub fn branch(&self, k: usize) -> Result<&AffineBranch> {
        if k == 0 || k >= self.degree() {
            return Err(Error::BadIndex {
                index: k,
                max: self.degree() - 1,
            });
        }
        Ok(&self.branches[k - 1])
    }

    /// Value of the map at node `k`, i.e. `θ(k)`.
    pub fn node_value(&self, k: usize) -> usize {
        self.values[k - 1]
    }

    pub fn left_clamp(&self) -> usize {
        self.values[0]
    }

    pub fn right_clamp(&self) -> usize {
        self.values[self.degree() - 1]
    }

    pub fn eval(&self, x: Rational) -> Rational {
        let n = self.degree() as i128;
        if x < Rational::one() {
            return Rational::from(self.left_clamp() as i128);
        }
        if x >= Rational::from(n) {
            return Rational::from(self.right_clamp() as i128);
        }
        let k = x.floor().to_integer();
        debug_assert!(k >= 1 && k < n);
        self.branches[(k - 1) as usize].eval(x)
    }

    /// `f(J_k) = [min(θ(k), θ(k+1)), max(θ(k), θ(k+1))]`.
    pub fn interval_image(&self, k: usize) -> Result<Block> {
        self.branch(k)?;
        let (a, b) = (self.values[k - 1], self.values[k]);
        Block::new(a.min(b), a.max(b))
    }

    /// Whether `f(J_k) ⊇ J_l`.
    pub fn covers(&self, k: usize, l: usize) -> bool {
        match self.interval_image(k) {
            Ok(img) => l >= 1 && img.lo() <= l && l < img.hi(),
            Err(_) => false,
        }
    }
}

pub fn primitive_function(p: &Permutation) -> Result<PiecewiseLinearMap> {
    PiecewiseLinearMap::new(p)
}
