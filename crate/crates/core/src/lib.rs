//! Exact arithmetic for third-order Horadam sequences `H(n)` and their
//! generalized Tribonacci companions `h(n)`.
//!
//! A sequence pair is described by six numbers: recurrence coefficients
//! `(r, s, t)` with `t != 0` and initial values `(a, b, c)`. Both sequences
//! obey
//!
//! ```text
//! H(n+3) = r*H(n+2) + s*H(n+1) + t*H(n)
//! ```
//!
//! with `H(0..3) = a, b, c` for the Horadam sequence and `0, 1, r` for the
//! Tribonacci companion. Indices extend to all integers via the inverted
//! recurrence `H(n) = (H(n+3) - r*H(n+2) - s*H(n+1)) / t`, which is why all
//! exact results are rationals ([`Rat`]).
//!
//! The crate is organized around four layers:
//!
//! - [`seq`]: sequence parameters ([`SequenceSpec`]) and O(n) exact term
//!   evaluation in both index directions — the reference oracle.
//! - [`matrix`]: exact 3x3 rational matrices whose entries are shifted
//!   sequence terms, with O(log n) evaluation by binary exponentiation
//!   ([`fast_term`]).
//! - [`binet`]: floating-point closed forms driven by the Cardano roots of
//!   `x^3 - r*x^2 - s*x - t` (requires a positive discriminant).
//! - [`identities`]: one machine-checkable verdict per sequence/matrix
//!   identity, plus a deterministic suite runner producing a JSON report.

pub mod binet;
pub mod error;
pub mod identities;
pub mod matrix;
pub mod rat;
pub mod seq;

pub use binet::{cubic_roots, BinetCoefficients, CubicRoots};
pub use error::Error;
pub use matrix::{
    fast_term, horadam_matrix_closed, trib_matrix_closed, trib_matrix_pow, trib_matrix_pow_counted,
    Mat3,
};
pub use rat::Rat;
pub use seq::{discriminant, horadam_term, term_range, tribonacci_term, SequenceSpec, TermCache};
