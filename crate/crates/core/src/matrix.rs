//! Exact 3x3 rational matrix sequences and O(log n) term evaluation.
//!
//! For a spec `(r, s, t; a, b, c)` two matrix families follow the same
//! third-order recurrence as the scalar sequences:
//!
//! - `trib_matrix(n)`, the generalized Tribonacci matrix sequence, equal to
//!   the n-th power of the companion matrix `[[r,s,t],[1,0,0],[0,1,0]]`
//!   (the identity at n = 0); and
//! - `horadam_matrix(n)`, whose entries are shifted Horadam terms.
//!
//! Entry layout (0-indexed rows/columns, `u = h` or `H`):
//!
//! ```text
//! | u(n+1)   s*u(n)   + t*u(n-1)   t*u(n)   |
//! | u(n)     s*u(n-1) + t*u(n-2)   t*u(n-1) |
//! | u(n-1)   s*u(n-2) + t*u(n-3)   t*u(n-2) |
//! ```
//!
//! so the term `u(n)` sits at entry (1, 0). The closed-form constructors
//! ([`trib_matrix_closed`], [`horadam_matrix_closed`]) realize this layout
//! directly from iterated terms and serve as the oracle; [`trib_matrix_pow`]
//! computes the same matrix by binary exponentiation in O(log |n|) matrix
//! multiplications, and [`fast_term`] reads scalar terms off it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::rat::{rat_int, rat_pow, rat_to_f64, Rat};
use crate::seq::{SequenceSpec, TermTable};

/// 3x3 matrix over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat3 {
    rows: [[Rat; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[Rat; 3]; 3]) -> Self {
        Self { rows }
    }

    pub fn zero() -> Self {
        Self::from_rows(std::array::from_fn(|_| {
            std::array::from_fn(|_| Rat::zero())
        }))
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rat {
        &self.rows[row][col]
    }

    pub fn rows(&self) -> &[[Rat; 3]; 3] {
        &self.rows
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = &self.rows[i][0] * &other.rows[0][j];
                acc += &self.rows[i][1] * &other.rows[1][j];
                acc += &self.rows[i][2] * &other.rows[2][j];
                out.rows[i][j] = acc;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] = &out.rows[i][j] + &other.rows[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] = &out.rows[i][j] - &other.rows[i][j];
            }
        }
        out
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mut out = self.clone();
        for row in &mut out.rows {
            for e in row {
                *e = &*e * k;
            }
        }
        out
    }

    pub fn det(&self) -> Rat {
        let m = &self.rows;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// `self^m` by binary exponentiation.
    pub fn pow(&self, m: u64) -> Self {
        self.pow_counted(m).0
    }

    /// `self^m` plus the number of matrix multiplications performed
    /// (at most `2*ceil(log2(m))` for `m >= 1`).
    pub fn pow_counted(&self, m: u64) -> (Self, usize) {
        if m == 0 {
            return (Self::identity(), 0);
        }
        let bits = 64 - m.leading_zeros();
        let mut acc = self.clone();
        let mut count = 0;
        for bit in (0..bits - 1).rev() {
            acc = acc.mul(&acc);
            count += 1;
            if (m >> bit) & 1 == 1 {
                acc = acc.mul(self);
                count += 1;
            }
        }
        (acc, count)
    }

    /// Entries as f64 (±inf on overflow), row-major.
    pub fn to_floats(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| rat_to_f64(&self.rows[i][j])))
    }

    /// Largest absolute entry difference, an exact residual.
    pub fn max_abs_diff(&self, other: &Self) -> Rat {
        let mut worst = Rat::zero();
        for i in 0..3 {
            for j in 0..3 {
                let d = (&self.rows[i][j] - &other.rows[i][j]).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "[{}, {}, {}]", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Self) -> Mat3 {
        Mat3::mul(self, rhs)
    }
}

impl Add for &Mat3 {
    type Output = Mat3;
    fn add(self, rhs: Self) -> Mat3 {
        Mat3::add(self, rhs)
    }
}

impl Sub for &Mat3 {
    type Output = Mat3;
    fn sub(self, rhs: Self) -> Mat3 {
        Mat3::sub(self, rhs)
    }
}

/// Integer 3x3 matrix used internally by the power path: companion powers
/// have integer entries, and staying in `BigInt` avoids per-step gcd
/// normalization on ever-larger values.
#[derive(Debug, Clone)]
struct IntMat3 {
    rows: [[BigInt; 3]; 3],
}

impl IntMat3 {
    fn identity() -> Self {
        let mut rows: [[BigInt; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero()));
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        Self { rows }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut rows: [[BigInt; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| BigInt::zero()));
        for (out_row, row) in rows.iter_mut().zip(&self.rows) {
            for (j, out) in out_row.iter_mut().enumerate() {
                let mut acc = &row[0] * &other.rows[0][j];
                acc += &row[1] * &other.rows[1][j];
                acc += &row[2] * &other.rows[2][j];
                *out = acc;
            }
        }
        Self { rows }
    }

    fn pow_counted(&self, m: u64) -> (Self, usize) {
        if m == 0 {
            return (Self::identity(), 0);
        }
        let bits = 64 - m.leading_zeros();
        let mut acc = self.clone();
        let mut count = 0;
        for bit in (0..bits - 1).rev() {
            acc = acc.mul(&acc);
            count += 1;
            if (m >> bit) & 1 == 1 {
                acc = acc.mul(self);
                count += 1;
            }
        }
        (acc, count)
    }

    /// Divide all entries by `den` into a rational matrix. Skips gcd
    /// reduction for `den = 1`: the entries are already in lowest terms,
    /// and reducing huge integers against 1 is quadratic in their length.
    fn to_mat3(&self, den: &BigInt) -> Mat3 {
        let one = den.is_one();
        Mat3::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if one {
                    Rat::from_integer(self.rows[i][j].clone())
                } else {
                    Rat::new(self.rows[i][j].clone(), den.clone())
                }
            })
        }))
    }
}

/// The companion matrix `[[r,s,t],[1,0,0],[0,1,0]]`, i.e. `trib_matrix(1)`.
pub fn companion_matrix(spec: &SequenceSpec) -> Mat3 {
    companion_int(spec).to_mat3(&BigInt::one())
}

fn companion_int(spec: &SequenceSpec) -> IntMat3 {
    let mut m = IntMat3::identity();
    m.rows[0] = [
        BigInt::from(spec.r()),
        BigInt::from(spec.s()),
        BigInt::from(spec.t()),
    ];
    m.rows[1] = [BigInt::one(), BigInt::zero(), BigInt::zero()];
    m.rows[2] = [BigInt::zero(), BigInt::one(), BigInt::zero()];
    m
}

/// `t` times the inverse of the companion matrix: `[[0,t,0],[0,0,t],[1,-r,-s]]`.
/// Integer by construction; dividing its n-th power by `t^n` gives
/// `trib_matrix(-n)`.
fn scaled_companion_inverse_int(spec: &SequenceSpec) -> IntMat3 {
    let mut m = IntMat3::identity();
    let t = BigInt::from(spec.t());
    m.rows[0] = [BigInt::zero(), t.clone(), BigInt::zero()];
    m.rows[1] = [BigInt::zero(), BigInt::zero(), t];
    m.rows[2] = [
        BigInt::one(),
        BigInt::from(-spec.r()),
        BigInt::from(-spec.s()),
    ];
    m
}

fn matrix_from_terms(terms: [Rat; 5], s: i64, t: i64) -> Mat3 {
    // terms = [u(n+1), u(n), u(n-1), u(n-2), u(n-3)]
    let (s, t) = (rat_int(s), rat_int(t));
    let [u_p1, u_0, u_m1, u_m2, u_m3] = terms;
    Mat3::from_rows([
        [u_p1, &s * &u_0 + &t * &u_m1, &t * &u_0],
        [u_0, &s * &u_m1 + &t * &u_m2, &t * &u_m1],
        [u_m1, &s * &u_m2 + &t * &u_m3, &t * &u_m2],
    ])
}

/// Closed-form `trib_matrix(n)` built from five consecutive `h` terms,
/// sharing a `TermTable`. Oracle path, O(|n|) on first use.
pub fn trib_matrix_from_table(table: &mut TermTable, n: i64) -> Mat3 {
    let terms = [
        table.trib(n + 1),
        table.trib(n),
        table.trib(n - 1),
        table.trib(n - 2),
        table.trib(n - 3),
    ];
    matrix_from_terms(terms, table.spec().s(), table.spec().t())
}

/// Closed-form `horadam_matrix(n)` from five consecutive `H` terms.
pub fn horadam_matrix_from_table(table: &mut TermTable, n: i64) -> Mat3 {
    let terms = [
        table.horadam(n + 1),
        table.horadam(n),
        table.horadam(n - 1),
        table.horadam(n - 2),
        table.horadam(n - 3),
    ];
    matrix_from_terms(terms, table.spec().s(), table.spec().t())
}

/// The generalized Tribonacci matrix at any integer index, from iterated
/// terms (the closed-form oracle).
pub fn trib_matrix_closed(spec: &SequenceSpec, n: i64) -> Mat3 {
    trib_matrix_from_table(&mut TermTable::new(spec), n)
}

/// The Horadam matrix at any integer index, from iterated terms. Entries
/// may be non-integral for small n (the n = 0 matrix has a `1/t` row).
pub fn horadam_matrix_closed(spec: &SequenceSpec, n: i64) -> Mat3 {
    horadam_matrix_from_table(&mut TermTable::new(spec), n)
}

/// `trib_matrix(n)` by binary exponentiation of the companion matrix
/// (its exact inverse for negative n), in O(log |n|) matrix multiplications.
pub fn trib_matrix_pow(spec: &SequenceSpec, n: i64) -> Mat3 {
    trib_matrix_pow_counted(spec, n).0
}

/// [`trib_matrix_pow`] plus the number of 3x3 matrix multiplications
/// performed; the count is at most `2*ceil(log2(|n|))` for `|n| >= 1`.
pub fn trib_matrix_pow_counted(spec: &SequenceSpec, n: i64) -> (Mat3, usize) {
    if n >= 0 {
        let (m, count) = companion_int(spec).pow_counted(n as u64);
        (m.to_mat3(&BigInt::one()), count)
    } else {
        let k = n.unsigned_abs();
        let kk = u32::try_from(k).expect("index magnitude fits in u32");
        let (m, count) = scaled_companion_inverse_int(spec).pow_counted(k);
        (m.to_mat3(&BigInt::from(spec.t()).pow(kk)), count)
    }
}

/// `(H(n), h(n))` in O(log |n|) arithmetic operations.
///
/// `h(n)` is entry (1,0) of `trib_matrix(n)`; `H(n)` follows from the
/// three-term decomposition `H(n) = b*h(n) + (c - r*b)*h(n-1) + t*a*h(n-2)`,
/// whose inputs all sit in the same matrix. The combination runs on scaled
/// big integers with one rational reduction at the end, so large indices pay
/// for big-integer multiplication only.
pub fn fast_term(spec: &SequenceSpec, n: i64) -> (Rat, Rat) {
    use num_integer::Integer;

    // Scale clearing the denominators of (a, b, c); the decomposition
    // coefficients b, c - r*b and t*a then scale to integers.
    let scale = spec
        .a()
        .denom()
        .lcm(spec.b().denom())
        .lcm(spec.c().denom());
    let f = |x: &Rat| (x.numer() * &scale) / x.denom();
    let (sa, sb, sc) = (f(spec.a()), f(spec.b()), f(spec.c()));

    // Entries of the integer power: h(n) at (1,0), h(n-1) at (2,0) and
    // t*h(n-2) at (2,2), all times t^k for negative n.
    let (im, k) = if n >= 0 {
        (companion_int(spec).pow_counted(n as u64).0, 0u32)
    } else {
        let k = n.unsigned_abs();
        (
            scaled_companion_inverse_int(spec).pow_counted(k).0,
            u32::try_from(k).expect("index magnitude fits in u32"),
        )
    };
    let num = &sb * &im.rows[1][0]
        + (&sc - BigInt::from(spec.r()) * &sb) * &im.rows[2][0]
        + &sa * &im.rows[2][2];

    let tk = BigInt::from(spec.t()).pow(k);
    let horadam = reduce_by(num, &(&scale * &tk));
    let h_n = reduce_by(im.rows[1][0].clone(), &tk);
    (horadam, h_n)
}

/// `num / den` in lowest terms, skipping the reduction when the denominator
/// is already one (reducing huge integers against 1 is quadratic).
fn reduce_by(num: BigInt, den: &BigInt) -> Rat {
    if den.is_one() {
        Rat::from_integer(num)
    } else {
        Rat::new(num, den.clone())
    }
}

/// Exact `t^n` for any integer n, the determinant of `trib_matrix(n)`.
pub fn det_law_rhs(spec: &SequenceSpec, n: i64) -> Rat {
    rat_pow(&rat_int(spec.t()), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::seq::{horadam_term, tribonacci_term};

    fn trib() -> SequenceSpec {
        SequenceSpec::tribonacci()
    }

    fn int_mat(entries: [[i64; 3]; 3]) -> Mat3 {
        Mat3::from_rows(entries.map(|row| row.map(rat_int)))
    }

    #[test]
    fn identity_is_neutral() {
        let spec = SequenceSpec::from_integers(2, -1, 3, 1, 0, 2).unwrap();
        let x = horadam_matrix_closed(&spec, 4);
        assert_eq!(Mat3::identity().mul(&x), x);
        assert_eq!(x.mul(&Mat3::identity()), x);
    }

    #[test]
    fn companion_square_matches_formula() {
        // trib_matrix(1)^2 = [[r^2+s, rs+t, rt], [r, s, t], [1, 0, 0]].
        for (r, s, t) in [(1i64, 1, 1), (2, -1, 3), (0, 1, 1), (-2, 0, -1)] {
            let spec = SequenceSpec::from_integers(r, s, t, 0, 1, r).unwrap();
            let m1 = companion_matrix(&spec);
            let square = m1.mul(&m1);
            let want = int_mat([[r * r + s, r * s + t, r * t], [r, s, t], [1, 0, 0]]);
            assert_eq!(square, want);
            assert_eq!(square, trib_matrix_closed(&spec, 2));
        }
    }

    #[test]
    fn product_top_left_is_term() {
        // trib_matrix(1) * trib_matrix(2) has top-left h(4) = 4.
        let spec = trib();
        let prod = trib_matrix_closed(&spec, 1).mul(&trib_matrix_closed(&spec, 2));
        assert_eq!(*prod.entry(0, 0), rat_int(4));
        assert_eq!(prod, trib_matrix_closed(&spec, 3));
    }

    #[test]
    fn trib_matrix_closed_examples() {
        let spec = trib();
        assert_eq!(trib_matrix_closed(&spec, 0), Mat3::identity());
        assert_eq!(
            trib_matrix_closed(&spec, 1),
            int_mat([[1, 1, 1], [1, 0, 0], [0, 1, 0]])
        );
        // h: 0,1,1,2,4,7,13 -> top row of n=5 is [13, 7+4, 7].
        let m5 = trib_matrix_closed(&spec, 5);
        assert_eq!(m5.rows()[0], [rat_int(13), rat_int(11), rat_int(7)]);
    }

    #[test]
    fn horadam_matrix_closed_examples() {
        let spec = SequenceSpec::from_integers(1, 1, 2, 3, 1, 4).unwrap();
        let (r, s, t) = (rat_int(1), rat_int(1), rat_int(2));
        let (a, b, c) = (spec.a().clone(), spec.b().clone(), spec.c().clone());

        // n = 1: [[c, sb+ta, tb], [b, c-rb, ta], [a, b-ra, c-rb-sa]].
        let m1 = horadam_matrix_closed(&spec, 1);
        let want1 = Mat3::from_rows([
            [c.clone(), &s * &b + &t * &a, &t * &b],
            [b.clone(), &c - &r * &b, &t * &a],
            [a.clone(), &b - &r * &a, &c - &r * &b - &s * &a],
        ]);
        assert_eq!(m1, want1);

        // n = 0 exposes the 1/t row: entry (2,0) is (c - rb - sa)/t and
        // entry (2,2) is (-sc + (t+rs)b + (s^2-rt)a)/t.
        let m0 = horadam_matrix_closed(&spec, 0);
        assert_eq!(*m0.entry(0, 0), b);
        assert_eq!(*m0.entry(2, 0), (&c - &r * &b - &s * &a) / &t);
        assert_eq!(
            *m0.entry(2, 2),
            (-(&s * &c) + (&t + &r * &s) * &b + (&s * &s - &r * &t) * &a) / &t
        );
        // Entry (2,1): the recurrence-consistent value is
        // r*(-c + rb + sa)/t + a; the bare r*(-c+rb+sa)/t (without +a) would
        // break trib_matrix-style consistency at the next index.
        assert_eq!(*m0.entry(2, 1), &r * (-&c + &r * &b + &s * &a) / &t + &a);

        // Matrix recurrence from n = 0..2 initial matrices reproduces n = 3.
        let m2 = horadam_matrix_closed(&spec, 2);
        let m3 = horadam_matrix_closed(&spec, 3);
        let via_recurrence = m2.scale(&r).add(&m1.scale(&s)).add(&m0.scale(&t));
        assert_eq!(via_recurrence, m3);

        // Tribonacci form makes the two families coincide.
        let tspec = trib();
        assert_eq!(
            horadam_matrix_closed(&tspec, 2),
            trib_matrix_closed(&tspec, 2)
        );
    }

    #[test]
    fn trib_matrix_pow_examples() {
        let spec = trib();
        assert_eq!(trib_matrix_pow(&spec, 0), Mat3::identity());

        // Oracle h-terms: ..., h(10) = 149, h(11) = 274.
        let mut cache = crate::seq::TermCache::new(&spec);
        assert_eq!(cache.term(10), rat_int(149));
        assert_eq!(cache.term(11), rat_int(274));
        let m10 = trib_matrix_pow(&spec, 10);
        assert_eq!(*m10.entry(0, 0), rat_int(274));
        assert_eq!(*m10.entry(1, 0), rat_int(149));

        // Negative power is the exact inverse.
        let m1 = companion_matrix(&spec);
        let minv = trib_matrix_pow(&spec, -1);
        assert_eq!(m1.mul(&minv), Mat3::identity());
        assert_eq!(minv.mul(&m1), Mat3::identity());
    }

    #[test]
    fn pow_counted_stays_within_binary_bound() {
        let spec = SequenceSpec::from_integers(2, 1, 3, 0, 1, 2).unwrap();
        for n in [1i64, 2, 3, 7, 20, 100, 1000, 65536, 1_000_000] {
            let (_, count) = trib_matrix_pow_counted(&spec, n);
            let bound = 2 * (64 - (n as u64).leading_zeros()) as usize;
            assert!(count <= bound, "n = {n}: {count} > {bound}");
        }
    }

    #[test]
    fn fast_term_examples() {
        let spec = trib();
        let (h20_big, h20) = fast_term(&spec, 20);
        assert_eq!(h20, rat_int(66012));
        assert_eq!(h20_big, rat_int(66012)); // H = h for the Tribonacci form

        let spec2 = SequenceSpec::from_integers(1, 1, 2, 3, 1, 4).unwrap();
        let (h1_big, h1) = fast_term(&spec2, 1);
        assert_eq!(h1_big, *spec2.b());
        assert_eq!(h1, rat_int(1));

        // Padovan h(12): oracle gives 0,1,0,1,1,1,2,2,3,4,5,7,9.
        let padovan = SequenceSpec::padovan();
        let mut cache = crate::seq::TermCache::new(&padovan.tribonacci_companion());
        assert_eq!(cache.term(12), rat_int(9));
        let (_, h12) = fast_term(&padovan, 12);
        assert_eq!(h12, rat_int(9));
    }

    #[test]
    fn pow_matches_closed_form_two_sided() {
        for (r, s, t, a, b, c) in [
            (1i64, 1, 1, 0, 1, 1),
            (2, -1, 3, 1, 0, 2),
            (0, 1, 1, 0, 1, 0),
            (-1, 2, -2, 2, -1, 3),
        ] {
            let spec = SequenceSpec::from_integers(r, s, t, a, b, c).unwrap();
            let mut table = TermTable::new(&spec);
            for n in -10..=25 {
                assert_eq!(
                    trib_matrix_pow(&spec, n),
                    trib_matrix_from_table(&mut table, n),
                    "spec {} n = {n}",
                    spec.describe()
                );
            }
        }
    }

    #[test]
    fn fast_term_matches_iterative_oracle() {
        let spec = SequenceSpec::new(2, 1, 3, rat(1, 2), rat_int(2), rat(5, 3)).unwrap();
        for n in -10..=40 {
            let (big, small) = fast_term(&spec, n);
            assert_eq!(big, horadam_term(&spec, n), "H n = {n}");
            assert_eq!(small, tribonacci_term(&spec, n), "h n = {n}");
        }
    }

    #[test]
    fn determinant_law() {
        for (r, s, t) in [(1i64, 1, 1), (2, -1, 3), (-2, 0, -1)] {
            let spec = SequenceSpec::from_integers(r, s, t, 0, 1, r).unwrap();
            let mut table = TermTable::new(&spec);
            for n in -5..=20 {
                assert_eq!(
                    trib_matrix_from_table(&mut table, n).det(),
                    det_law_rhs(&spec, n),
                    "({r},{s},{t}) n = {n}"
                );
            }
        }
    }

    #[test]
    fn semigroup_additivity() {
        let spec = SequenceSpec::from_integers(1, 2, 1, 0, 1, 1).unwrap();
        for (n, m) in [(3i64, 4i64), (-2, 5), (0, -7), (-3, -4), (8, 8)] {
            let lhs = trib_matrix_pow(&spec, n).mul(&trib_matrix_pow(&spec, m));
            assert_eq!(lhs, trib_matrix_pow(&spec, n + m), "n={n} m={m}");
        }
    }

    #[test]
    fn matrix_level_recurrence() {
        // Both families satisfy M(n+3) = r*M(n+2) + s*M(n+1) + t*M(n).
        let spec = SequenceSpec::new(2, -1, 3, rat(1, 2), rat_int(2), rat(5, 3)).unwrap();
        let (r, s, t) = (rat_int(2), rat_int(-1), rat_int(3));
        let mut table = TermTable::new(&spec);
        for n in [-6i64, -1, 0, 4, 11] {
            let trib = trib_matrix_from_table(&mut table, n + 2)
                .scale(&r)
                .add(&trib_matrix_from_table(&mut table, n + 1).scale(&s))
                .add(&trib_matrix_from_table(&mut table, n).scale(&t));
            assert_eq!(trib, trib_matrix_from_table(&mut table, n + 3), "h n={n}");
            let hor = horadam_matrix_from_table(&mut table, n + 2)
                .scale(&r)
                .add(&horadam_matrix_from_table(&mut table, n + 1).scale(&s))
                .add(&horadam_matrix_from_table(&mut table, n).scale(&t));
            assert_eq!(hor, horadam_matrix_from_table(&mut table, n + 3), "H n={n}");
        }
    }
}
