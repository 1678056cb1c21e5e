use alloc::vec::Vec;

use super::loops::Loop;
use super::primitive::PiecewiseLinearMap;
use super::Rational;
use crate::error::{Error, Result};

/// A periodic point realising a loop, with its forward orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicOrbit {
    /// `x_0, f(x_0), ..., f^(m-1)(x_0)`; `x_i` lies in `J_{k_i}`.
    pub points: Vec<Rational>,
    /// Least `d >= 1` with `f^d(x_0) = x_0`; divides the loop length.
    pub minimal_period: usize,
}

impl PeriodicOrbit {
    pub fn seed(&self) -> Rational {
        self.points[0]
    }
}

/// Finds `x_0 ∈ J_{k_0}` whose itinerary follows `lp` with `f^m(x_0) = x_0`.
///
/// Pulls `J_{k_0}` back through the branches of the loop to get the
/// interval of points with that itinerary, then solves the composed affine
/// map for its fixed point.
pub fn periodic_orbit_from_loop(f: &PiecewiseLinearMap, lp: &Loop) -> Result<PeriodicOrbit> {
    let ks = lp.vertices();
    let m = ks.len();
    for i in 0..m {
        if !f.covers(ks[i], ks[(i + 1) % m]) {
            return Err(Error::InvalidLoop);
        }
    }

    let unit = |k: usize| (Rational::from(k as i128), Rational::from(k as i128 + 1));
    let mut lo_hi = unit(ks[0]);
    for &k in ks.iter().rev() {
        let b = f.branch(k)?;
        let (a, c) = (b.solve(lo_hi.0), b.solve(lo_hi.1));
        lo_hi = if a <= c { (a, c) } else { (c, a) };
    }
    let (lo, hi) = lo_hi;

    let (mut slope, mut intercept) = (1i128, 0i128);
    for &k in ks {
        let b = f.branch(k)?;
        let (bm, bb) = (b.slope as i128, b.intercept as i128);
        slope = slope.checked_mul(bm).ok_or(Error::Overflow)?;
        intercept = intercept
            .checked_mul(bm)
            .and_then(|x| x.checked_add(bb))
            .ok_or(Error::Overflow)?;
    }

    let seed = if slope != 1 {
        Rational::new(intercept, 1 - slope)
    } else if intercept == 0 {
        // every point of the pulled-back interval is fixed
        (lo + hi) / Rational::from(2)
    } else {
        return Err(Error::DegenerateLoop);
    };
    if seed < lo || seed > hi {
        return Err(Error::DegenerateLoop);
    }

    let mut points = Vec::with_capacity(m);
    let mut x = seed;
    for &k in ks {
        let (a, b) = unit(k);
        if x < a || x > b {
            return Err(Error::DegenerateLoop);
        }
        points.push(x);
        x = f.branch(k)?.eval(x);
    }
    if x != seed {
        return Err(Error::DegenerateLoop);
    }
    let minimal_period = (1..=m)
        .find(|&d| m % d == 0 && (0..m).all(|i| points[i] == points[(i + d) % m]))
        .unwrap_or(m);
    Ok(PeriodicOrbit {
        points,
        minimal_period,
    })
}
