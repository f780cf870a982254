//! Sequence parameters and exact O(n) term evaluation.
//!
//! [`SequenceSpec`] is the single source of truth for a sequence pair: the
//! Horadam sequence `H(n)` with initial values `(a, b, c)` and its
//! generalized Tribonacci companion `h(n)` with initial values `(0, 1, r)`.
//! Terms are defined for every integer index; negative indices use the
//! inverted recurrence and generally produce non-integral rationals.
//!
//! Evaluation here is deliberately iterative (O(|n|)) so it can serve as the
//! independent oracle for the O(log n) matrix path in [`crate::matrix`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::rat::{rat_int, Rat};

/// The six defining parameters of a sequence pair: recurrence coefficients
/// `(r, s, t)` with `t != 0`, and Horadam initial values `(a, b, c)`.
///
/// Construction only fails for `t = 0`. A positive discriminant is *not*
/// required: it only gates the closed-form operations in [`crate::binet`],
/// and is exposed here as [`SequenceSpec::binet_available`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequenceSpec {
    r: i64,
    s: i64,
    t: i64,
    a: Rat,
    b: Rat,
    c: Rat,
}

impl SequenceSpec {
    pub fn new(r: i64, s: i64, t: i64, a: Rat, b: Rat, c: Rat) -> Result<Self, Error> {
        if t == 0 {
            return Err(Error::ZeroT);
        }
        Ok(Self { r, s, t, a, b, c })
    }

    /// Convenience constructor for all-integer parameters.
    pub fn from_integers(r: i64, s: i64, t: i64, a: i64, b: i64, c: i64) -> Result<Self, Error> {
        Self::new(r, s, t, rat_int(a), rat_int(b), rat_int(c))
    }

    /// Tribonacci numbers: coefficients (1,1,1), initial values (0,1,1).
    pub fn tribonacci() -> Self {
        Self::from_integers(1, 1, 1, 0, 1, 1).expect("t != 0")
    }

    /// Padovan numbers: coefficients (0,1,1), initial values (0,1,0).
    pub fn padovan() -> Self {
        Self::from_integers(0, 1, 1, 0, 1, 0).expect("t != 0")
    }

    /// Narayana's cows sequence, using the conventional parameterization
    /// (1,0,1) with initial values (0,1,1).
    pub fn narayana() -> Self {
        Self::from_integers(1, 0, 1, 0, 1, 1).expect("t != 0")
    }

    /// Third-order Jacobsthal numbers, using the conventional
    /// parameterization (1,1,2) with initial values (0,1,1).
    pub fn third_order_jacobsthal() -> Self {
        Self::from_integers(1, 1, 2, 0, 1, 1).expect("t != 0")
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn c(&self) -> &Rat {
        &self.c
    }

    pub fn discriminant(&self) -> Rat {
        discriminant(self.r, self.s, self.t)
    }

    /// True when the discriminant is strictly positive, i.e. the closed
    /// forms in [`crate::binet`] apply.
    pub fn binet_available(&self) -> bool {
        self.discriminant().is_positive()
    }

    /// The companion spec `(r, s, t; 0, 1, r)` whose Horadam sequence *is*
    /// the generalized Tribonacci sequence `h(n)`.
    pub fn tribonacci_companion(&self) -> Self {
        Self {
            r: self.r,
            s: self.s,
            t: self.t,
            a: Rat::zero(),
            b: Rat::one(),
            c: rat_int(self.r),
        }
    }

    /// True when `(a, b, c) = (0, 1, r)`, so `H(n) = h(n)` for all n.
    pub fn is_tribonacci_form(&self) -> bool {
        self.a.is_zero() && self.b.is_one() && self.c == rat_int(self.r)
    }

    pub fn has_integer_initials(&self) -> bool {
        self.a.is_integer() && self.b.is_integer() && self.c.is_integer()
    }

    /// Compact display form `(r,s,t; a,b,c)`.
    pub fn describe(&self) -> String {
        format!(
            "({},{},{}; {},{},{})",
            self.r, self.s, self.t, self.a, self.b, self.c
        )
    }
}

/// The discriminant-style quantity
/// `r^3*t/27 - r^2*s^2/108 + r*s*t/6 - s^3/27 + t^2/4`, exact.
///
/// Positive iff the characteristic cubic `x^3 - r*x^2 - s*x - t` has one
/// real root and a conjugate complex pair.
pub fn discriminant(r: i64, s: i64, t: i64) -> Rat {
    let (r, s, t) = (BigInt::from(r), BigInt::from(s), BigInt::from(t));
    let r2 = &r * &r;
    let s2 = &s * &s;
    // Common denominator 108: 4r^3t - r^2s^2 + 18rst - 4s^3 + 27t^2.
    let num = 4 * &r2 * &r * &t - &r2 * &s2 + 18 * &r * &s * &t - 4 * &s2 * &s + 27 * &t * &t;
    Rat::new(num, BigInt::from(108))
}

/// Sliding three-term window over a Horadam sequence.
///
/// The window holds `H(base), H(base+1), H(base+2)`. Sliding forward applies
/// the recurrence; sliding backward applies its inversion (divides by `t`).
#[derive(Debug, Clone)]
pub struct TermCache {
    spec: SequenceSpec,
    base: i64,
    window: [Rat; 3],
    // Coefficients as rationals, promoted once.
    rr: Rat,
    rs: Rat,
    rt: Rat,
}

impl TermCache {
    pub fn new(spec: &SequenceSpec) -> Self {
        Self {
            base: 0,
            window: [spec.a().clone(), spec.b().clone(), spec.c().clone()],
            rr: rat_int(spec.r()),
            rs: rat_int(spec.s()),
            rt: rat_int(spec.t()),
            spec: spec.clone(),
        }
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn window(&self) -> &[Rat; 3] {
        &self.window
    }

    /// Advance the window by one: it then covers `base+1 ..= base+3`.
    pub fn slide_forward(&mut self) {
        let next =
            &self.rr * &self.window[2] + &self.rs * &self.window[1] + &self.rt * &self.window[0];
        self.window.rotate_left(1);
        self.window[2] = next;
        self.base += 1;
    }

    /// Retreat the window by one: it then covers `base-1 ..= base+1`.
    pub fn slide_backward(&mut self) {
        let prev = (&self.window[2] - &self.rr * &self.window[1] - &self.rs * &self.window[0])
            / &self.rt;
        self.window.rotate_right(1);
        self.window[0] = prev;
        self.base -= 1;
    }

    /// The term at index `n`, sliding the window as needed.
    pub fn term(&mut self, n: i64) -> Rat {
        while self.base + 2 < n {
            self.slide_forward();
        }
        while self.base > n {
            self.slide_backward();
        }
        self.window[(n - self.base) as usize].clone()
    }
}

/// Scale factor that clears the denominators of `(a, b, c)`.
fn initial_scale(spec: &SequenceSpec) -> BigInt {
    spec.a()
        .denom()
        .lcm(spec.b().denom())
        .lcm(spec.c().denom())
}

/// Scaled integer initial values `L*a, L*b, L*c`.
fn scaled_initials(spec: &SequenceSpec, scale: &BigInt) -> [BigInt; 3] {
    let f = |x: &Rat| (x.numer() * scale) / x.denom();
    [f(spec.a()), f(spec.b()), f(spec.c())]
}

/// `num / den` in lowest terms, skipping the (potentially huge) gcd when
/// the denominator is already one.
fn reduce_by(num: BigInt, den: &BigInt) -> Rat {
    if den.is_one() {
        Rat::from_integer(num)
    } else {
        Rat::new(num, den.clone())
    }
}

/// Exact Horadam term `H(n)` for any integer index, O(|n|).
///
/// Internally the iteration runs on scaled big integers (the denominators of
/// `a, b, c` and, for negative indices, powers of `t` are factored out), so
/// only a single rational reduction happens at the end. The result is
/// integer-valued whenever `a, b, c` are integers and `n >= 0`.
pub fn horadam_term(spec: &SequenceSpec, n: i64) -> Rat {
    let scale = initial_scale(spec);
    let [wa, wb, wc] = scaled_initials(spec, &scale);
    let (r, s, t) = (
        BigInt::from(spec.r()),
        BigInt::from(spec.s()),
        BigInt::from(spec.t()),
    );

    if n >= 0 {
        let mut w = [wa, wb, wc];
        if n <= 2 {
            return reduce_by(w[n as usize].clone(), &scale);
        }
        for _ in 3..=n {
            let mut next = BigInt::zero();
            add_scaled(&mut next, &r, &w[2]);
            add_scaled(&mut next, &s, &w[1]);
            add_scaled(&mut next, &t, &w[0]);
            w.rotate_left(1);
            w[2] = next;
        }
        return reduce_by(w[2].clone(), &scale);
    }

    // Backward: track u(j) = L * t^j * H(-j), which satisfies the integer
    // recurrence u(j) = t^2*u(j-3) - r*t*u(j-2) - s*u(j-1).
    let k = n.unsigned_abs();
    let u0 = wa;
    let u1 = &wc - &r * &wb - &s * &u0;
    let u2 = &t * &wb - &r * &t * &u0 - &s * &u1;
    let mut w = [u0, u1, u2];
    let t2 = &t * &t;
    let rt = -(&r * &t);
    let ms = -&s;
    for _ in 3..=k {
        let mut next = BigInt::zero();
        add_scaled(&mut next, &t2, &w[0]);
        add_scaled(&mut next, &rt, &w[1]);
        add_scaled(&mut next, &ms, &w[2]);
        w.rotate_left(1);
        w[2] = next;
    }
    let idx = if k <= 2 { k as usize } else { 2 };
    let kk = u32::try_from(k).expect("index magnitude fits in u32");
    Rat::new(w[idx].clone(), scale * t.pow(kk))
}

/// `acc += k * x` without allocating temporaries for `k` in {-1, 0, 1},
/// the common coefficients in the hot iteration loops.
fn add_scaled(acc: &mut BigInt, k: &BigInt, x: &BigInt) {
    if k.is_zero() {
        return;
    }
    if k.magnitude().is_one() {
        if k.is_negative() {
            *acc -= x;
        } else {
            *acc += x;
        }
    } else {
        *acc += k * x;
    }
}

/// Exact generalized Tribonacci term `h(n)`: the Horadam term of the
/// companion spec `(r, s, t; 0, 1, r)`.
pub fn tribonacci_term(spec: &SequenceSpec, n: i64) -> Rat {
    horadam_term(&spec.tribonacci_companion(), n)
}

/// Rows `(n, H(n), h(n))` for `n` in `[lo, hi]`, computed with one sliding
/// window per sequence in O(|lo| + (hi - lo)) arithmetic operations.
pub fn term_range(spec: &SequenceSpec, lo: i64, hi: i64) -> Result<Vec<(i64, Rat, Rat)>, Error> {
    if lo > hi {
        return Err(Error::EmptyRange { lo, hi });
    }
    let mut horadam = TermCache::new(spec);
    let mut trib = TermCache::new(&spec.tribonacci_companion());
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        rows.push((n, horadam.term(n), trib.term(n)));
    }
    Ok(rows)
}

/// Growable two-sided table of `h` and `H` terms for one spec.
///
/// Used wherever many terms of the same sequence pair are needed (matrix
/// construction, the identity suite); grows on demand in either direction.
#[derive(Debug, Clone)]
pub struct TermTable {
    spec: SequenceSpec,
    horadam: CachedSeq,
    trib: CachedSeq,
}

#[derive(Debug, Clone)]
struct CachedSeq {
    lo: i64,
    terms: std::collections::VecDeque<Rat>,
    rr: Rat,
    rs: Rat,
    rt: Rat,
}

impl CachedSeq {
    fn new(spec: &SequenceSpec) -> Self {
        Self {
            lo: 0,
            terms: [spec.a().clone(), spec.b().clone(), spec.c().clone()]
                .into_iter()
                .collect(),
            rr: rat_int(spec.r()),
            rs: rat_int(spec.s()),
            rt: rat_int(spec.t()),
        }
    }

    fn term(&mut self, n: i64) -> Rat {
        while self.lo + (self.terms.len() as i64) <= n {
            let k = self.terms.len();
            let next = &self.rr * &self.terms[k - 1]
                + &self.rs * &self.terms[k - 2]
                + &self.rt * &self.terms[k - 3];
            self.terms.push_back(next);
        }
        while self.lo > n {
            let prev =
                (&self.terms[2] - &self.rr * &self.terms[1] - &self.rs * &self.terms[0]) / &self.rt;
            self.terms.push_front(prev);
            self.lo -= 1;
        }
        self.terms[(n - self.lo) as usize].clone()
    }
}

impl TermTable {
    pub fn new(spec: &SequenceSpec) -> Self {
        Self {
            spec: spec.clone(),
            horadam: CachedSeq::new(spec),
            trib: CachedSeq::new(&spec.tribonacci_companion()),
        }
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    pub fn horadam(&mut self, n: i64) -> Rat {
        self.horadam.term(n)
    }

    pub fn trib(&mut self, n: i64) -> Rat {
        self.trib.term(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    /// Independent brute-force oracle: iterate the recurrence in plain
    /// rational arithmetic, forward from the initial window.
    fn oracle_forward(r: i64, s: i64, t: i64, a: Rat, b: Rat, c: Rat, n: usize) -> Vec<Rat> {
        let mut v = vec![a, b, c];
        while v.len() <= n {
            let k = v.len();
            let next = rat_int(r) * &v[k - 1] + rat_int(s) * &v[k - 2] + rat_int(t) * &v[k - 3];
            v.push(next);
        }
        v
    }

    fn oracle_backward_once(spec: &SequenceSpec, w0: &Rat, w1: &Rat, w2: &Rat) -> Rat {
        (w2 - rat_int(spec.r()) * w1 - rat_int(spec.s()) * w0) / rat_int(spec.t())
    }

    #[test]
    fn make_spec_examples() {
        let trib = SequenceSpec::tribonacci();
        assert!(trib.binet_available());
        let padovan = SequenceSpec::padovan();
        assert!(padovan.binet_available());
        assert_eq!(
            SequenceSpec::from_integers(1, 1, 0, 0, 1, 1),
            Err(Error::ZeroT)
        );
    }

    #[test]
    fn discriminant_examples() {
        // Direct substitution: 1/27 - 1/108 + 1/6 - 1/27 + 1/4 = 11/27.
        assert_eq!(discriminant(1, 1, 1), rat(11, 27));
        // Only the t^2/4 term survives.
        assert_eq!(discriminant(0, 0, 1), rat(1, 4));
        // 1/4 - 1/27 = 23/108.
        assert_eq!(discriminant(0, 1, 1), rat(23, 108));
        // Triple root (x-1)^3: boundary case, exactly zero.
        assert_eq!(discriminant(3, -3, 1), rat_int(0));
    }

    #[test]
    fn horadam_term_examples() {
        let trib = SequenceSpec::tribonacci();
        // Oracle: 0,1,1,2,4,7,13,24.
        let o = oracle_forward(1, 1, 1, rat_int(0), rat_int(1), rat_int(1), 7);
        assert_eq!(o[7], rat_int(24));
        assert_eq!(horadam_term(&trib, 7), rat_int(24));
        assert_eq!(horadam_term(&trib, 0), *trib.a());

        // H(-1) = (c - r b - s a)/t, non-integral example.
        let spec = SequenceSpec::from_integers(2, 1, 3, 1, 0, 2).unwrap();
        let expected = oracle_backward_once(&spec, spec.a(), spec.b(), spec.c());
        assert_eq!(expected, rat(1, 3));
        assert_eq!(horadam_term(&spec, -1), rat(1, 3));
    }

    #[test]
    fn tribonacci_term_examples() {
        let trib = SequenceSpec::tribonacci();
        assert_eq!(tribonacci_term(&trib, 5), rat_int(7));
        for (r, s, t) in [(1, 1, 1), (2, -1, 3), (0, 1, 1), (-2, 5, -3)] {
            let spec = SequenceSpec::from_integers(r, s, t, 9, 9, 9).unwrap();
            assert_eq!(tribonacci_term(&spec, 2), rat_int(r));
            assert_eq!(tribonacci_term(&spec, 1), rat_int(1));
            assert_eq!(tribonacci_term(&spec, 0), rat_int(0));
        }
        // Backward: (h2 - r h1 - s h0)/t = 0, then 1.
        assert_eq!(tribonacci_term(&trib, -1), rat_int(0));
        assert_eq!(tribonacci_term(&trib, -2), rat_int(1));
    }

    #[test]
    fn term_range_examples() {
        let trib = SequenceSpec::tribonacci();
        let rows = term_range(&trib, 0, 4).unwrap();
        let want = [0i64, 1, 1, 2, 4];
        for (i, (n, big, small)) in rows.iter().enumerate() {
            assert_eq!(*n, i as i64);
            assert_eq!(*big, rat_int(want[i]));
            assert_eq!(*small, rat_int(want[i]));
        }

        let single = term_range(&trib, 3, 3).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0], (3, rat_int(2), rat_int(2)));

        let padovan = SequenceSpec::padovan();
        let rows = term_range(&padovan, 0, 7).unwrap();
        let h: Vec<Rat> = rows.iter().map(|(_, _, h)| h.clone()).collect();
        let want: Vec<Rat> = [0, 1, 0, 1, 1, 1, 2, 2].iter().map(|&x| rat_int(x)).collect();
        assert_eq!(h, want);

        assert_eq!(
            term_range(&trib, 2, 1),
            Err(Error::EmptyRange { lo: 2, hi: 1 })
        );
    }

    #[test]
    fn backward_term_via_cache_matches_direct() {
        let spec = SequenceSpec::new(1, 1, 2, rat(1, 2), rat_int(1), rat_int(2)).unwrap();
        let mut cache = TermCache::new(&spec);
        for n in (-12..=12).rev() {
            assert_eq!(cache.term(n), horadam_term(&spec, n), "n = {n}");
        }
    }

    #[test]
    fn term_table_grows_both_ways() {
        let spec = SequenceSpec::from_integers(2, 1, 3, 1, 0, 2).unwrap();
        let mut table = TermTable::new(&spec);
        assert_eq!(table.horadam(10), horadam_term(&spec, 10));
        assert_eq!(table.horadam(-7), horadam_term(&spec, -7));
        assert_eq!(table.trib(-4), tribonacci_term(&spec, -4));
        assert_eq!(table.trib(15), tribonacci_term(&spec, 15));
        // Revisit cached indices after growth in the other direction.
        assert_eq!(table.horadam(0), *spec.a());
        assert_eq!(table.trib(2), rat_int(spec.r()));
    }

    proptest! {
        #[test]
        fn forward_backward_round_trip(
            r in -5i64..=5, s in -5i64..=5, t in prop_oneof![-5i64..=-1, 1i64..=5],
            a in -4i64..=4, b in -4i64..=4, c in -4i64..=4,
            steps in 1usize..20,
        ) {
            let spec = SequenceSpec::from_integers(r, s, t, a, b, c).unwrap();
            let mut cache = TermCache::new(&spec);
            let original = cache.window().clone();
            for _ in 0..steps { cache.slide_backward(); }
            for _ in 0..steps { cache.slide_forward(); }
            prop_assert_eq!(cache.base(), 0);
            prop_assert_eq!(cache.window(), &original);
        }

        #[test]
        fn recurrence_holds_exactly(
            r in -5i64..=5, s in -5i64..=5, t in prop_oneof![-5i64..=-1, 1i64..=5],
            a in -4i64..=4, b in -4i64..=4, c in -4i64..=4,
            n in -15i64..=25,
        ) {
            let spec = SequenceSpec::from_integers(r, s, t, a, b, c).unwrap();
            let lhs = horadam_term(&spec, n + 3);
            let rhs = rat_int(r) * horadam_term(&spec, n + 2)
                + rat_int(s) * horadam_term(&spec, n + 1)
                + rat_int(t) * horadam_term(&spec, n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_initials_give_integer_forward_terms(
            r in -5i64..=5, s in -5i64..=5, t in prop_oneof![-5i64..=-1, 1i64..=5],
            a in -4i64..=4, b in -4i64..=4, c in -4i64..=4,
            n in 0i64..=30,
        ) {
            let spec = SequenceSpec::from_integers(r, s, t, a, b, c).unwrap();
            prop_assert!(horadam_term(&spec, n).is_integer());
        }
    }

    #[test]
    fn tribonacci_form_specialization() {
        for (r, s, t) in [(1, 1, 1), (0, 1, 1), (2, -1, 3), (-1, 2, -2)] {
            let spec = SequenceSpec::from_integers(r, s, t, 0, 1, r).unwrap();
            assert!(spec.is_tribonacci_form());
            for n in -20..=60 {
                assert_eq!(
                    horadam_term(&spec, n),
                    tribonacci_term(&spec, n),
                    "({r},{s},{t}) n = {n}"
                );
            }
        }
    }

    #[test]
    fn forward_terms_match_brute_force_oracle() {
        let spec = SequenceSpec::new(2, -1, 3, rat(1, 2), rat_int(1), rat(2, 3)).unwrap();
        let oracle = oracle_forward(2, -1, 3, rat(1, 2), rat_int(1), rat(2, 3), 30);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(horadam_term(&spec, n as i64), *expected, "n = {n}");
        }
    }
}
