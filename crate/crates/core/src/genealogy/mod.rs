//! Generators for the known branches of simple cycles and the machinery
//! that relates consecutive members.

mod mixed;
mod oracle;
mod pow2;
mod stefan;

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use mixed::{
    enumerate_sim_4n2, mixed_branch, square_root_with, square_spec, MixedFamily, SquareSpec,
};
pub use oracle::{brute_force_sim, full_cycles, BRUTE_FORCE_CAP};
pub use pow2::{pow2_branch, star, substar, transposition_product, Pow2Family};
pub use stefan::{stefan_alpha, stefan_beta, StefanVariant};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A branch of a genealogy: one permutation per admissible order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BranchFamily {
    Stefan(StefanVariant),
    Pow2(Pow2Family),
    Mixed(MixedFamily),
}

impl BranchFamily {
    pub const ALL: [BranchFamily; 8] = [
        BranchFamily::Pow2(Pow2Family::Theta),
        BranchFamily::Pow2(Pow2Family::Phi),
        BranchFamily::Mixed(MixedFamily::Theta),
        BranchFamily::Mixed(MixedFamily::Eta),
        BranchFamily::Mixed(MixedFamily::Phi),
        BranchFamily::Mixed(MixedFamily::Varphi),
        BranchFamily::Stefan(StefanVariant::Alpha),
        BranchFamily::Stefan(StefanVariant::Beta),
    ];

    pub fn name(self) -> &'static str {
        match self {
            BranchFamily::Pow2(Pow2Family::Theta) => "pow2_theta",
            BranchFamily::Pow2(Pow2Family::Phi) => "pow2_phi",
            BranchFamily::Mixed(MixedFamily::Theta) => "mixed_theta",
            BranchFamily::Mixed(MixedFamily::Eta) => "mixed_eta",
            BranchFamily::Mixed(MixedFamily::Phi) => "mixed_phi",
            BranchFamily::Mixed(MixedFamily::Varphi) => "mixed_varphi",
            BranchFamily::Stefan(StefanVariant::Alpha) => "stefan_alpha",
            BranchFamily::Stefan(StefanVariant::Beta) => "stefan_beta",
        }
    }

    /// Order of the `index`-th member (0-based): `1, 2, 4, ...` for
    /// power-of-two branches, `3, 5, 7, ...` for Stefan, `6, 10, 14, ...`
    /// for mixed.
    pub fn order_at(self, index: usize) -> usize {
        match self {
            BranchFamily::Pow2(_) => 1 << index,
            BranchFamily::Stefan(_) => 2 * index + 3,
            BranchFamily::Mixed(_) => 4 * index + 6,
        }
    }

    /// The member of this branch of the given order.
    pub fn member(self, order: usize) -> Result<Permutation> {
        match self {
            BranchFamily::Pow2(f) => pow2_branch(f, order),
            BranchFamily::Stefan(v) => v.build(order),
            BranchFamily::Mixed(f) => mixed_branch(f, order),
        }
    }

    /// Which branch, if any, has `p` as a member.
    pub fn containing(p: &Permutation) -> Option<BranchFamily> {
        Self::ALL
            .into_iter()
            .find(|f| f.member(p.degree()).ok().as_ref() == Some(p))
    }
}

impl fmt::Display for BranchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BranchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or(Error::Parse("unknown branch family"))
    }
}

/// The first `count` members of a branch in predecessor order.
pub fn family_chain(family: BranchFamily, count: usize) -> Result<Vec<Permutation>> {
    (0..count)
        .map(|i| family.member(family.order_at(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        let phi = family_chain(BranchFamily::Mixed(MixedFamily::Phi), 2).unwrap();
        assert_eq!(phi[0].to_cycle_string(), "(1,5,2,6,3,4)");
        assert_eq!(phi[1].to_cycle_string(), "(1,8,3,9,4,7,2,10,5,6)");
        let alpha = family_chain(BranchFamily::Stefan(StefanVariant::Alpha), 2).unwrap();
        assert_eq!(
            alpha,
            alloc::vec![stefan_alpha(3).unwrap(), stefan_alpha(5).unwrap()]
        );
        let theta = family_chain(BranchFamily::Pow2(Pow2Family::Theta), 3).unwrap();
        let cycles: Vec<_> = theta.iter().map(|p| p.to_cycle_string()).collect();
        assert_eq!(cycles, ["(1)", "(1,2)", "(1,3,2,4)"]);
        assert!(family_chain(BranchFamily::Pow2(Pow2Family::Phi), 0)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn names_round_trip() {
        for f in BranchFamily::ALL {
            assert_eq!(f.name().parse::<BranchFamily>().unwrap(), f);
        }
        assert!("mixed_zeta".parse::<BranchFamily>().is_err());
    }

    #[test]
    fn containing_branch() {
        let t = mixed_branch(MixedFamily::Eta, 10).unwrap();
        assert_eq!(
            BranchFamily::containing(&t),
            Some(BranchFamily::Mixed(MixedFamily::Eta))
        );
        // θ_2 = φ_2 = (1,2): the power-of-two branches share their first members
        let two = Permutation::from_images(alloc::vec![2, 1]).unwrap();
        assert_eq!(
            BranchFamily::containing(&two),
            Some(BranchFamily::Pow2(Pow2Family::Theta))
        );
        let other = Permutation::from_images(alloc::vec![4, 6, 5, 3, 2, 1]).unwrap();
        assert_eq!(BranchFamily::containing(&other), None);
    }
}
