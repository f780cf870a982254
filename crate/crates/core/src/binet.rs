//! Floating-point closed forms driven by the roots of the characteristic
//! cubic `nu(x) = x^3 - r*x^2 - s*x - t`.
//!
//! Everything here requires a strictly positive discriminant, which
//! guarantees one real root `alpha` and a conjugate pair `omega1, omega2`.
//! Root labeling convention: `omega1` carries the non-negative imaginary
//! part (`omega1 = r/3 + eps*A + eps^2*B` with `A >= B`); every formula in
//! this module is invariant under swapping the labels, which the test suite
//! exercises via [`CubicRoots::swapped`].
//!
//! Tolerances (empirically safe for |r|,|s|,|t| <= 10 in double precision):
//! [`TOL_ROOT`] for scaled root residuals, [`TOL_IMAG`] for the scaled
//! imaginary part left over after assembling a real quantity from conjugate
//! contributions, and [`TOL_BINET_REL`] for comparisons against exact terms
//! up to index 40. Float error grows with the index; past n = 40 the
//! closed forms are still computable but the 1e-6 guarantee no longer
//! holds. Degenerate specs whose terms cancel to zero against much larger
//! root powers (e.g. (0,0,t), where every third term vanishes) lose
//! per-value accuracy proportionally to that cancellation; matrix
//! comparisons are therefore stated relative to the matrix magnitude.

use num_complex::Complex64;

use crate::error::Error;
use crate::matrix::{horadam_matrix_closed, trib_matrix_closed, Mat3};
use crate::rat::{rat_to_f64, Rat};
use crate::seq::{discriminant, SequenceSpec};

/// Scaled residual bound for each root: `|nu(root)| <= TOL_ROOT * scale`.
pub const TOL_ROOT: f64 = 1e-10;
/// Scaled bound on the imaginary part of assembled real quantities.
pub const TOL_IMAG: f64 = 1e-8;
/// Relative tolerance for closed-form vs exact comparisons up to n = 40.
pub const TOL_BINET_REL: f64 = 1e-6;

/// The primitive cube root of unity `-1/2 + i*sqrt(3)/2`.
pub fn unity_cube_root() -> Complex64 {
    Complex64::new(-0.5, 3.0_f64.sqrt() / 2.0)
}

/// Cardano data for `x^3 - r*x^2 - s*x - t` with positive discriminant:
/// the exact discriminant, the two real cube roots `A >= B`, the real root
/// `alpha = r/3 + A + B`, and the conjugate pair.
#[derive(Debug, Clone)]
pub struct CubicRoots {
    pub delta: Rat,
    pub big_a: f64,
    pub big_b: f64,
    pub alpha: f64,
    pub omega1: Complex64,
    pub omega2: Complex64,
    r: i64,
    s: i64,
    t: i64,
}

impl CubicRoots {
    /// `nu(x) = x^3 - r*x^2 - s*x - t` at a complex point.
    pub fn nu(&self, x: Complex64) -> Complex64 {
        ((x - self.r as f64) * x - self.s as f64) * x - self.t as f64
    }

    /// Residual of `x` as a root, scaled by the magnitude of the evaluation.
    pub fn scaled_residual(&self, x: Complex64) -> f64 {
        let m = x.norm();
        let scale = (m * m * m)
            + (self.r as f64).abs() * m * m
            + (self.s as f64).abs() * m
            + (self.t as f64).abs();
        self.nu(x).norm() / scale.max(1.0)
    }

    /// The same roots with the `omega1`/`omega2` labels exchanged.
    /// Useful for checking that downstream formulas are label-invariant.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.omega1, &mut out.omega2);
        out
    }
}

/// Cardano roots of `x^3 - r*x^2 - s*x - t`.
///
/// `A` and `B` take the real cube roots of their (real, since the
/// discriminant is positive) radicands; the radicand of `A` is the larger
/// one, which makes `alpha` real by construction and gives `omega1` a
/// non-negative imaginary part.
pub fn cubic_roots(r: i64, s: i64, t: i64) -> Result<CubicRoots, Error> {
    let delta = discriminant(r, s, t);
    if delta <= Rat::from_integer(0.into()) {
        return Err(Error::NonPositiveDiscriminant { delta });
    }
    let sqrt_delta = rat_to_f64(&delta).sqrt();
    let rf = r as f64;
    let sf = s as f64;
    let tf = t as f64;
    let radicand_center = rf * rf * rf / 27.0 + rf * sf / 6.0 + tf / 2.0;
    let big_a = (radicand_center + sqrt_delta).cbrt();
    let big_b = (radicand_center - sqrt_delta).cbrt();
    let alpha = rf / 3.0 + big_a + big_b;
    // eps*A + eps^2*B = -(A+B)/2 + i*sqrt(3)/2*(A-B).
    let omega1 = Complex64::new(
        rf / 3.0 - (big_a + big_b) / 2.0,
        3.0_f64.sqrt() / 2.0 * (big_a - big_b),
    );
    let omega2 = omega1.conj();
    Ok(CubicRoots {
        delta,
        big_a,
        big_b,
        alpha,
        omega1,
        omega2,
        r,
        s,
        t,
    })
}

/// The three numerator coefficients of the scalar closed form, determined
/// by the initial values. For the Tribonacci form `(a,b,c) = (0,1,r)` they
/// collapse to the roots themselves.
#[derive(Debug, Clone)]
pub struct BinetCoefficients {
    pub alpha_coeff: Complex64,
    pub omega1_coeff: Complex64,
    pub omega2_coeff: Complex64,
}

pub fn binet_coefficients(spec: &SequenceSpec, roots: &CubicRoots) -> BinetCoefficients {
    let a = rat_to_f64(spec.a());
    let b = rat_to_f64(spec.b());
    let c = rat_to_f64(spec.c());
    let alpha = Complex64::from(roots.alpha);
    let (w1, w2) = (roots.omega1, roots.omega2);
    BinetCoefficients {
        alpha_coeff: c - (w1 + w2) * b + w1 * w2 * a,
        omega1_coeff: c - (alpha + w2) * b + alpha * w2 * a,
        omega2_coeff: c - (alpha + w1) * b + alpha * w1 * a,
    }
}

/// `z^n` by binary exponentiation; deterministic and accurate for the
/// moderate exponents used here.
fn cpowi(z: Complex64, n: u32) -> Complex64 {
    let mut base = z;
    let mut exp = n;
    let mut acc = Complex64::new(1.0, 0.0);
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// Scaled imaginary residual of a quantity that should be real.
fn imag_residual(z: Complex64) -> f64 {
    z.im.abs() / z.re.abs().max(1.0)
}

fn scalar_closed_form(spec: &SequenceSpec, roots: &CubicRoots, n: u32) -> Complex64 {
    let coeff = binet_coefficients(spec, roots);
    let alpha = Complex64::from(roots.alpha);
    let (w1, w2) = (roots.omega1, roots.omega2);
    coeff.alpha_coeff * cpowi(alpha, n) / ((alpha - w1) * (alpha - w2))
        - coeff.omega1_coeff * cpowi(w1, n) / ((alpha - w1) * (w1 - w2))
        + coeff.omega2_coeff * cpowi(w2, n) / ((alpha - w2) * (w1 - w2))
}

/// Closed-form `H(n)` as a float (requires a positive discriminant).
pub fn binet_term(spec: &SequenceSpec, n: u32) -> Result<f64, Error> {
    binet_term_with_residual(spec, n).map(|(v, _)| v)
}

/// Closed-form `H(n)` along with the scaled imaginary residual of the
/// assembled complex sum (a numerical health indicator, normally far below
/// [`TOL_IMAG`]).
pub fn binet_term_with_residual(spec: &SequenceSpec, n: u32) -> Result<(f64, f64), Error> {
    let roots = cubic_roots(spec.r(), spec.s(), spec.t())?;
    let z = scalar_closed_form(spec, &roots, n);
    Ok((z.re, imag_residual(z)))
}

/// Same as [`binet_term_with_residual`] but reusing precomputed roots
/// (also the hook for label-swap checks).
pub fn binet_term_with_roots(spec: &SequenceSpec, roots: &CubicRoots, n: u32) -> (f64, f64) {
    let z = scalar_closed_form(spec, roots, n);
    (z.re, imag_residual(z))
}

/// 3x3 matrix of floats produced by the matrix closed forms.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat3F {
    pub rows: [[f64; 3]; 3],
}

impl Mat3F {
    pub fn entry(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    /// Largest entrywise difference against an exact matrix, relative to the
    /// matrix magnitude: `max_ij |a_ij - e_ij| / max(1, max_ij |e_ij|)`.
    ///
    /// The closed form reconstructs the matrix from root powers, so its
    /// accuracy is inherently relative to the largest component. Entries
    /// that cancel exactly (a zero in the coefficient matrices) would fail
    /// any per-entry relative bound in double precision.
    pub fn max_rel_diff(&self, exact: &Mat3) -> f64 {
        let e = exact.to_floats();
        let scale = e
            .iter()
            .flatten()
            .fold(1.0f64, |acc, x| acc.max(x.abs()));
        let mut worst: f64 = 0.0;
        for (row, exact_row) in self.rows.iter().zip(&e) {
            for (v, ex) in row.iter().zip(exact_row) {
                worst = worst.max((v - ex).abs() / scale);
            }
        }
        worst
    }
}

#[derive(Clone)]
struct CMat {
    rows: [[Complex64; 3]; 3],
}

impl CMat {
    fn from_exact(m: &Mat3) -> Self {
        let f = m.to_floats();
        Self {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| Complex64::from(f[i][j]))),
        }
    }

    fn combine(terms: &[(Complex64, &CMat)]) -> Self {
        let mut rows = [[Complex64::new(0.0, 0.0); 3]; 3];
        for (w, m) in terms {
            for (out_row, m_row) in rows.iter_mut().zip(&m.rows) {
                for (out, v) in out_row.iter_mut().zip(m_row) {
                    *out += w * v;
                }
            }
        }
        Self { rows }
    }
}

/// Shared matrix closed form: given the three initial matrices of a family,
/// evaluate the root-power combination at index n. Returns the real-part
/// matrix and the worst scaled imaginary residual.
fn matrix_closed_form(m0: &Mat3, m1: &Mat3, m2: &Mat3, roots: &CubicRoots, n: u32) -> (Mat3F, f64) {
    let alpha = Complex64::from(roots.alpha);
    let (w1, w2) = (roots.omega1, roots.omega2);
    let c0 = CMat::from_exact(m0);
    let c1 = CMat::from_exact(m1);
    let c2 = CMat::from_exact(m2);
    let one = Complex64::new(1.0, 0.0);

    // Numerators of the three coefficient matrices.
    let num_a = CMat::combine(&[(one, &c2), (-(w1 + w2), &c1), (w1 * w2, &c0)]);
    let num_b = CMat::combine(&[(one, &c2), (-(alpha + w2), &c1), (alpha * w2, &c0)]);
    let num_c = CMat::combine(&[(one, &c2), (-(alpha + w1), &c1), (alpha * w1, &c0)]);

    let wa = cpowi(alpha, n) / ((alpha - w1) * (alpha - w2));
    let wb = -cpowi(w1, n) / ((alpha - w1) * (w1 - w2));
    let wc = cpowi(w2, n) / ((alpha - w2) * (w1 - w2));
    let sum = CMat::combine(&[(wa, &num_a), (wb, &num_b), (wc, &num_c)]);

    let mut rows = [[0.0f64; 3]; 3];
    let mut worst = 0.0f64;
    for (out_row, sum_row) in rows.iter_mut().zip(&sum.rows) {
        for (out, z) in out_row.iter_mut().zip(sum_row) {
            *out = z.re;
            worst = worst.max(imag_residual(*z));
        }
    }
    (Mat3F { rows }, worst)
}

/// Closed-form generalized Tribonacci matrix at index n, as floats.
pub fn binet_matrix_trib(spec: &SequenceSpec, n: u32) -> Result<Mat3F, Error> {
    binet_matrix_trib_with_residual(spec, n).map(|(m, _)| m)
}

pub fn binet_matrix_trib_with_residual(
    spec: &SequenceSpec,
    n: u32,
) -> Result<(Mat3F, f64), Error> {
    let roots = cubic_roots(spec.r(), spec.s(), spec.t())?;
    Ok(binet_matrix_trib_with_roots(spec, &roots, n))
}

pub fn binet_matrix_trib_with_roots(
    spec: &SequenceSpec,
    roots: &CubicRoots,
    n: u32,
) -> (Mat3F, f64) {
    let m0 = trib_matrix_closed(spec, 0);
    let m1 = trib_matrix_closed(spec, 1);
    let m2 = trib_matrix_closed(spec, 2);
    matrix_closed_form(&m0, &m1, &m2, roots, n)
}

/// Closed-form Horadam matrix at index n, as floats.
pub fn binet_matrix_horadam(spec: &SequenceSpec, n: u32) -> Result<Mat3F, Error> {
    binet_matrix_horadam_with_residual(spec, n).map(|(m, _)| m)
}

pub fn binet_matrix_horadam_with_residual(
    spec: &SequenceSpec,
    n: u32,
) -> Result<(Mat3F, f64), Error> {
    let roots = cubic_roots(spec.r(), spec.s(), spec.t())?;
    Ok(binet_matrix_horadam_with_roots(spec, &roots, n))
}

pub fn binet_matrix_horadam_with_roots(
    spec: &SequenceSpec,
    roots: &CubicRoots,
    n: u32,
) -> (Mat3F, f64) {
    let m0 = horadam_matrix_closed(spec, 0);
    let m1 = horadam_matrix_closed(spec, 1);
    let m2 = horadam_matrix_closed(spec, 2);
    matrix_closed_form(&m0, &m1, &m2, roots, n)
}
