use thiserror::Error;

use crate::scroll::DivisorClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid scroll S({a0},{a1}): need 0 < a0 <= a1")]
    InvalidScroll { a0: i64, a1: i64 },

    #[error("negative symmetric power {0}")]
    NegativeSymPower(i64),

    #[error("restriction to curve class {0} is not supported (use (0,1), (1,0) or (1,-a1))")]
    UnsupportedCurveClass(DivisorClass),

    #[error("D.(D-K) = {0} is odd; the intersection form is broken")]
    OddIntersection(i64),

    #[error("bundle is not regular")]
    NotRegular,

    #[error("bundle is empty (a = b = 0)")]
    EmptyBundle,

    #[error("regularity undetermined: probe at p = {p} is interval-valued")]
    Indeterminate { p: i64 },

    #[error("arrangement counts must be nonnegative (a = {a}, b = {b})")]
    NegativeCount { a: i64, b: i64 },

    #[error("e = {e} > 0 admits at most one curve in |H - a1 f|, got {b}")]
    TooManyCurves { e: i64, b: i64 },

    #[error("arrangement of {a} lines and {b} curves is outside the computed cases")]
    UnsupportedArrangement { a: i64, b: i64 },

    #[error("expected a rank 2 bundle, got rank {0}")]
    RankMismatch(usize),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
