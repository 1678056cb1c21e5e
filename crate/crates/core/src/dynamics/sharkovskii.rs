use core::cmp::Ordering;
use core::fmt;

/// A positive integer `n = q * 2^s` (`q` odd), ordered by the Sharkovskii
/// ordering
///
/// `3 ⊲ 5 ⊲ 7 ⊲ ... ⊲ 2·3 ⊲ 2·5 ⊲ ... ⊲ 4·3 ⊲ ... ⊲ 8 ⊲ 4 ⊲ 2 ⊲ 1`.
///
/// `a < b` means `a` comes first, i.e. a continuous interval map with a
/// point of period `a` also has one of period `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SharkovskiiKey {
    odd_part: u64,
    exponent: u32,
}

impl SharkovskiiKey {
    /// `None` for zero.
    pub fn new(n: u64) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let exponent = n.trailing_zeros();
        Some(SharkovskiiKey {
            odd_part: n >> exponent,
            exponent,
        })
    }

    pub fn value(self) -> u64 {
        self.odd_part << self.exponent
    }

    pub fn odd_part(self) -> u64 {
        self.odd_part
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    pub fn is_power_of_two(self) -> bool {
        self.odd_part == 1
    }
}

impl Ord for SharkovskiiKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_power_of_two(), other.is_power_of_two()) {
            (false, false) => (self.exponent, self.odd_part).cmp(&(other.exponent, other.odd_part)),
            (false, true) => Ordering::Less,
            (true, false) => Ordering::Greater,
            (true, true) => other.exponent.cmp(&self.exponent),
        }
    }
}

impl PartialOrd for SharkovskiiKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SharkovskiiKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `a ⊲ b` in the Sharkovskii ordering; `false` if either is zero.
pub fn sharkovskii_less(a: u64, b: u64) -> bool {
    match (SharkovskiiKey::new(a), SharkovskiiKey::new(b)) {
        (Some(x), Some(y)) => x < y,
        _ => false,
    }
}
