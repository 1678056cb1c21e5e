//! The primitive piecewise-linear map of a cyclic permutation, its Markov
//! graph, loops and the periodic orbits they force.

mod loops;
mod markov;
mod orbit;
mod primitive;
mod sharkovskii;

pub use loops::{
    find_nonrepetitive_loop, has_closed_walk, has_nonrepetitive_loop, is_primitive_word,
    primitive_closed_walk_count, Loop,
};
pub use markov::{markov_graph, MarkovGraph};
pub use orbit::{periodic_orbit_from_loop, PeriodicOrbit};
pub use primitive::{primitive_function, AffineBranch, PiecewiseLinearMap};
pub use sharkovskii::{sharkovskii_less, SharkovskiiKey};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Exact rational numbers used for points of the interval.
pub type Rational = num_rational::Ratio<i128>;

/// Whether the cycle `p` forces period `m`: its primitive map has a
/// periodic point of minimal period `m`.
///
/// Period `n = deg p` is always realised by `p` itself; any other period is
/// realised iff the Markov graph carries a non-repetitive loop of length `m`.
pub fn forces_period(p: &Permutation, m: usize) -> Result<bool> {
    if !p.is_full_cycle() {
        return Err(Error::NotACycle);
    }
    if m == 0 {
        return Err(Error::ZeroPeriod);
    }
    let n = p.degree();
    if m == n {
        return Ok(true);
    }
    if n == 1 {
        return Ok(false);
    }
    Ok(has_nonrepetitive_loop(&markov_graph(p)?, m))
}
