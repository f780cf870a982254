//! Domain errors shared by all modules.

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// `t = 0` breaks the backward recurrence and the matrix determinant law.
    #[error("t must be nonzero: the inverted recurrence divides by t")]
    ZeroT,

    /// Requested range has `lo > hi`.
    #[error("empty range: lo = {lo} exceeds hi = {hi}")]
    EmptyRange { lo: i64, hi: i64 },

    /// Closed-form roots only exist (in the form used here) when the
    /// discriminant is strictly positive.
    #[error("discriminant {delta} is not positive: no real/conjugate-pair root split")]
    NonPositiveDiscriminant { delta: Rat },

    /// Identity evaluated outside the index range it is stated for.
    #[error("index outside the stated range: {detail}")]
    IndexOutOfStatedRange { detail: String },

    /// Geometric matrix sums require `x != 0`.
    #[error("x must be nonzero")]
    ZeroX,

    /// `x` is a rational root of the characteristic cubic, so the geometric
    /// sum's right-hand side is undefined.
    #[error("x = {x} is a root of the characteristic cubic; sum formula undefined")]
    RootOfNu { x: Rat },

    /// The subsequence-sum denominator is too close to zero to divide by.
    #[error("sigma factor {sigma:e} is numerically unusable")]
    SigmaNearZero { sigma: f64 },
}
