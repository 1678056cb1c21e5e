use thiserror::Error;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a permutation must have degree at least 1")]
    EmptyPermutation,
    #[error("images are not a bijection of 1..={degree}")]
    NotABijection { degree: usize },
    #[error("index {index} is out of range for degree {degree}")]
    OutOfRange { index: usize, degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("block {lo}..={hi} is not mapped onto itself")]
    NotInvariant { lo: usize, hi: usize },
    #[error("invalid block {lo}..={hi}")]
    InvalidBlock { lo: usize, hi: usize },
    #[error("invalid cycle: {0}")]
    InvalidCycle(&'static str),
    #[error("cycles are not disjoint")]
    NotDisjoint,
    #[error("the left cycle must carry the smaller minimum")]
    BadOrdering,
    #[error("index {index} outside 1..={max}")]
    BadIndex { index: usize, max: usize },
    #[error("{total} is not divisible by {parts}")]
    NotDivisible { total: usize, parts: usize },
    #[error("degree {0} is too small, need at least 2")]
    DegreeTooSmall(usize),
    #[error("permutation is not a full cycle")]
    NotACycle,
    #[error("period must be at least 1")]
    ZeroPeriod,
    #[error("loop is not a closed walk of the Markov graph")]
    InvalidLoop,
    #[error("composed branch map has slope 1 and nonzero intercept")]
    DegenerateLoop,
    #[error("exact arithmetic overflowed")]
    Overflow,
    #[error("degree {0} is not admissible here")]
    BadDegree(usize),
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("square-root chase did not close into a bijection")]
    ChaseFailure,
    #[error("order {order} exceeds the brute-force cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
