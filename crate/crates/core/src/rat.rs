//! Exact rational scalars.
//!
//! Everything exact in this crate lives in [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. Backed by
//! `num_rational::BigRational`, which maintains both invariants on every
//! operation.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

/// The integer `n` as a `Rat`.
pub fn rat_int<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// `x^e` for any integer exponent; `x` must be nonzero when `e < 0`.
pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    let mag = u32::try_from(e.unsigned_abs()).expect("exponent magnitude fits in u32");
    // x is in lowest terms, so its powers are too.
    let p = Rat::new_raw(x.numer().pow(mag), x.denom().pow(mag));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Best-effort `f64` value (±inf on overflow).
pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}: {reason}")]
pub struct ParseRatError {
    pub input: String,
    pub reason: &'static str,
}

/// Parse `"p"` or `"p/q"` with optional signs, e.g. `-3`, `1/2`, `-7/3`.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let err = |reason| ParseRatError {
        input: s.to_string(),
        reason,
    };
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| err("numerator is not an integer"))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| err("denominator is not an integer"))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(err("denominator is zero"));
    }
    Ok(Rat::new(numer, denom))
}

/// The absolute difference `|x - y|`, used for exact residuals.
pub fn abs_diff(x: &Rat, y: &Rat) -> Rat {
    (x - y).abs()
}
