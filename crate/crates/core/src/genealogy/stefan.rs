//! Stefan orbits `α_{2n+1}` and `β_{2n+1}`, the two simple cycles of each
//! odd order.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Which of the two Stefan cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StefanVariant {
    Alpha,
    Beta,
}

impl StefanVariant {
    pub fn name(self) -> &'static str {
        match self {
            StefanVariant::Alpha => "alpha",
            StefanVariant::Beta => "beta",
        }
    }

    pub fn build(self, degree: usize) -> Result<Permutation> {
        match self {
            StefanVariant::Alpha => stefan_alpha(degree),
            StefanVariant::Beta => stefan_beta(degree),
        }
    }
}

fn half(degree: usize) -> Result<usize> {
    if degree < 3 || degree % 2 == 0 {
        return Err(Error::BadDegree(degree));
    }
    Ok((degree - 1) / 2)
}

/// `α_{2n+1} = (1, 2n+1, n+1, n, n+2, n-1, ..., 2, 2n)`.
pub fn stefan_alpha(degree: usize) -> Result<Permutation> {
    let n = half(degree)?;
    let images = (1..=degree)
        .map(|i| match i {
            i if i <= n => 2 * n + 2 - i,
            i if i == n + 1 => n,
            i if i <= 2 * n => 2 * n + 1 - i,
            _ => n + 1,
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

/// `β_{2n+1} = (1, n+1, n+2, n, n+3, n-1, ..., 2, 2n+1)`.
pub fn stefan_beta(degree: usize) -> Result<Permutation> {
    let n = half(degree)?;
    let images = (1..=degree)
        .map(|i| match i {
            1 => n + 1,
            i if i <= n + 1 => 2 * n + 3 - i,
            i => 2 * n + 2 - i,
        })
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn images(p: Permutation) -> alloc::vec::Vec<usize> {
        p.into_images()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(images(stefan_alpha(5).unwrap()), [5, 4, 2, 1, 3]);
        assert_eq!(images(stefan_alpha(3).unwrap()), [3, 1, 2]);
        assert_eq!(images(stefan_alpha(7).unwrap()), [7, 6, 5, 3, 2, 1, 4]);
    }

    #[test]
    fn beta_values() {
        assert_eq!(images(stefan_beta(5).unwrap()), [3, 5, 4, 2, 1]);
        assert_eq!(images(stefan_beta(3).unwrap()), [2, 3, 1]);
        assert_eq!(images(stefan_beta(7).unwrap()), [4, 7, 6, 5, 3, 2, 1]);
    }

    #[test]
    fn cycle_forms_match_the_closed_formulas() {
        // α_7 = (1,7,4,3,5,2,6), β_7 = (1,4,5,3,6,2,7)
        assert_eq!(
            stefan_alpha(7).unwrap().to_cycle_string(),
            "(1,7,4,3,5,2,6)"
        );
        assert_eq!(stefan_beta(7).unwrap().to_cycle_string(), "(1,4,5,3,6,2,7)");
        for m in (3..40).step_by(2) {
            assert!(stefan_alpha(m).unwrap().is_full_cycle());
            assert!(stefan_beta(m).unwrap().is_full_cycle());
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        for m in [0, 1, 2, 4, 10] {
            assert_eq!(stefan_alpha(m), Err(Error::BadDegree(m)));
            assert_eq!(stefan_beta(m), Err(Error::BadDegree(m)));
        }
    }
}
