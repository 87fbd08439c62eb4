//! Truncated formal power series over the rationals.
//!
//! A [`Series`] stores the coefficients of `t^0 .. t^cap` exactly; everything
//! above the cap is unknown, not zero. Binary operations truncate to the
//! smaller cap of the two operands, division by a series of order `m` and the
//! formal `t`-derivative shrink the cap. Callers that need a degree-`n`
//! result therefore construct their inputs with a couple of degrees of
//! headroom (see [`CAP_GUARD`]).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{factorial, Rational};

/// Extra degrees requested beyond the output degree. Two, because the
/// scalar pairings in the identity suite act on `x^(n+1)`.
pub const CAP_GUARD: usize = 2;

/// A formal power series in `t`, truncated at a fixed degree cap.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    /// `coeffs[i]` is the coefficient of `t^i`; the length is always `cap + 1`.
    coeffs: Vec<Rational>,
}

impl Series {
    /// Build a series from raw coefficients; the cap is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series retains at least t^0");
        Series { coeffs }
    }

    /// Coefficient of `t^i` given by a function, for `i = 0..=cap`.
    pub fn from_fn(cap: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=cap).map(f).collect(),
        }
    }

    pub fn zero(cap: usize) -> Self {
        Series::from_fn(cap, |_| Rational::zero())
    }

    pub fn one(cap: usize) -> Self {
        Series::constant(Rational::one(), cap)
    }

    pub fn constant(c: Rational, cap: usize) -> Self {
        let mut s = Series::zero(cap);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^power`, truncated at `cap` (zero if `power > cap`).
    pub fn monomial(power: usize, c: Rational, cap: usize) -> Self {
        let mut s = Series::zero(cap);
        if power <= cap {
            s.coeffs[power] = c;
        }
        s
    }

    /// The exponential `e^(a t)`: coefficients `a^i / i!`.
    pub fn exp_scaled(a: &Rational, cap: usize) -> Self {
        let mut coeffs = Vec::with_capacity(cap + 1);
        let mut term = Rational::one();
        coeffs.push(term.clone());
        for i in 1..=cap {
            term = term * a / Rational::from_integer(i.into());
            coeffs.push(term.clone());
        }
        Series { coeffs }
    }

    /// Highest retained power of `t`.
    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^i`. Panics beyond the cap; use [`Series::get`] to probe.
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Smallest `i` with a nonzero coefficient, or `None` if the series is
    /// zero up to its cap (which does not prove it is zero).
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero_to_cap(&self) -> bool {
        self.order().is_none()
    }

    /// Lower the cap to `cap`, dropping higher coefficients.
    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap(), "truncate can only lower the cap");
        Series {
            coeffs: self.coeffs[..=cap].to_vec(),
        }
    }

    /// `true` when all coefficients agree up to the smaller of the two caps.
    pub fn agrees_with(&self, other: &Series) -> bool {
        let upto = self.cap().min(other.cap());
        self.coeffs[..=upto] == other.coeffs[..=upto]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller cap.
    fn cauchy(&self, rhs: &Series) -> Series {
        let cap = self.cap().min(rhs.cap());
        let mut coeffs = vec![Rational::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().take(cap + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (b, out) in rhs.coeffs[..=cap - i].iter().zip(coeffs[i..].iter_mut()) {
                if !b.is_zero() {
                    *out += a * b;
                }
            }
        }
        Series { coeffs }
    }

    /// `self^e` truncated at the cap of `self`.
    pub fn pow(&self, e: usize) -> Series {
        let mut acc = Series::one(self.cap());
        for _ in 0..e {
            acc = acc.cauchy(self);
        }
        acc
    }

    /// Exact quotient `self / den`.
    ///
    /// Both operands are first stripped of `t^m`, where `m` is the order of
    /// the denominator, then the remaining unit division is solved as a
    /// triangular system. The quotient cap is `min cap - m`.
    pub fn divide(&self, den: &Series) -> Result<Series> {
        let m = den.order().ok_or(Error::ZeroDivisor)?;
        match self.order() {
            Some(o) if o < m => {
                return Err(Error::DivisionOrder {
                    numerator_order: Some(o),
                    denominator_order: m,
                })
            }
            _ => {}
        }
        let cap = self.cap().min(den.cap());
        if cap < m {
            return Err(Error::CapExhausted { cap, needed: m });
        }
        let out_cap = cap - m;
        let num = &self.coeffs[m..=m + out_cap];
        let unit = &den.coeffs[m..=m + out_cap];
        let lead = &unit[0];
        let mut q = vec![Rational::zero(); out_cap + 1];
        for n in 0..=out_cap {
            let mut acc = num[n].clone();
            for k in 1..=n {
                if !unit[k].is_zero() && !q[n - k].is_zero() {
                    acc -= &unit[k] * &q[n - k];
                }
            }
            q[n] = acc / lead;
        }
        Ok(Series { coeffs: q })
    }

    /// Substitute `inner` for `t`. The inner series must be a delta series
    /// (zero constant term); only its powers up to the common cap contribute.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NotDelta);
        }
        let cap = self.cap().min(inner.cap());
        // Horner evaluation: ((f_N) g + f_{N-1}) g + ... + f_0.
        let mut acc = Series::constant(self.coeffs[cap].clone(), cap);
        for i in (0..cap).rev() {
            acc = acc.cauchy(inner);
            acc.coeffs[0] += &self.coeffs[i];
        }
        Ok(acc)
    }

    /// Formal derivative with respect to `t`; the cap drops by one.
    pub fn derivative(&self) -> Result<Series> {
        if self.cap() == 0 {
            return Err(Error::CapExhausted { cap: 0, needed: 1 });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Ok(Series { coeffs })
    }

    /// Coefficients rescaled as `i! * [t^i]`, the natural reading of a
    /// series as an exponential generating function.
    pub fn egf_coeff(&self, i: usize) -> Rational {
        self.coeff(i) * Rational::from_integer(factorial(i))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[cap={}](", self.cap())?;
        fmt_terms(f, &self.coeffs, "t")?;
        write!(f, ")")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "t")?;
        write!(f, " + O(t^{})", self.cap() + 1)
    }
}

pub(crate) fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut wrote = false;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if wrote {
            write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
        } else if c.is_negative() {
            write!(f, "-")?;
        }
        let mag = c.abs();
        match (i, mag.is_one()) {
            (0, _) => write!(f, "{mag}")?,
            (1, true) => write!(f, "{var}")?,
            (1, false) => write!(f, "{mag}*{var}")?,
            (_, true) => write!(f, "{var}^{i}")?,
            (_, false) => write!(f, "{mag}*{var}^{i}")?,
        }
        wrote = true;
    }
    if !wrote {
        write!(f, "0")?;
    }
    Ok(())
}

macro_rules! series_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                let cap = self.cap().min(rhs.cap());
                Series {
                    coeffs: (0..=cap).map(|i| &self.coeffs[i] $op &rhs.coeffs[i]).collect(),
                }
            }
        }
        impl $trait<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                (&self).$method(rhs)
            }
        }
    };
}

series_binop!(Add, add, +);
series_binop!(Sub, sub, -);

impl Mul<&Series> for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.cauchy(rhs)
    }
}

impl Mul<Series> for Series {
    type Output = Series;
    fn mul(self, rhs: Series) -> Series {
        self.cauchy(&rhs)
    }
}

impl Mul<&Series> for Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.cauchy(rhs)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn s(coeffs: &[(i64, i64)]) -> Series {
        Series::from_coeffs(coeffs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn add_cancellation_and_identity() {
        let a = s(&[(1, 1), (1, 1)]); // 1 + t
        let b = s(&[(1, 1), (-1, 1)]); // 1 - t
        assert_eq!(&a + &b, s(&[(2, 1), (0, 1)]));
        let z = Series::zero(1);
        assert_eq!(&a + &z, a);
        // exact rational sums: t/2 + t/3 = 5t/6
        let half_t = Series::monomial(1, ratio(1, 2), 3);
        let third_t = Series::monomial(1, ratio(1, 3), 3);
        assert_eq!(&half_t + &third_t, Series::monomial(1, ratio(5, 6), 3));
    }

    #[test]
    fn mul_basics() {
        let a = s(&[(1, 1), (1, 1), (0, 1)]);
        let b = s(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(&a * &b, s(&[(1, 1), (0, 1), (-1, 1)])); // 1 - t^2
        assert_eq!(&a * &Series::one(2), a);
    }

    #[test]
    fn mul_exp_minus_one_squared() {
        // (e^t - 1)^2 at cap 4 = t^2 + t^3 + 7/12 t^4, by hand-convolving
        // the reciprocal-factorial coefficients.
        let e = Series::exp_scaled(&rat(1), 4) - Series::one(4);
        let sq = e.pow(2);
        assert_eq!(sq, s(&[(0, 1), (0, 1), (1, 1), (1, 1), (7, 12)]));
    }

    #[test]
    fn divide_bernoulli_kernel() {
        // q = t / (e^t - 1), checked against the triangular system
        // q * (e^t - 1) = t as well as frozen low-order values.
        let t = Series::monomial(1, rat(1), 6);
        let den = Series::exp_scaled(&rat(1), 6) - Series::one(6);
        let q = t.divide(&den).unwrap();
        assert_eq!(q.cap(), 5);
        assert_eq!(
            q.coeffs(),
            &[
                rat(1),
                ratio(-1, 2),
                ratio(1, 12),
                rat(0),
                ratio(-1, 720),
                rat(0)
            ]
        );
        assert!((&q * &den).agrees_with(&t));
    }

    #[test]
    fn divide_identities() {
        let a = s(&[(3, 1), (1, 2), (5, 1), (-1, 3)]);
        assert_eq!(a.divide(&Series::one(3)).unwrap(), a);
        // t^2 / t = t, pure order cancellation
        let t2 = Series::monomial(2, rat(1), 4);
        let t = Series::monomial(1, rat(1), 4);
        assert_eq!(t2.divide(&t).unwrap(), Series::monomial(1, rat(1), 3));
    }

    #[test]
    fn divide_rejects_bad_orders() {
        let t = Series::monomial(1, rat(1), 4);
        let one = Series::one(4);
        assert_eq!(
            one.divide(&t),
            Err(Error::DivisionOrder {
                numerator_order: Some(0),
                denominator_order: 1
            })
        );
        assert_eq!(t.divide(&Series::zero(4)), Err(Error::ZeroDivisor));
        // zero numerator divides to zero at the reduced cap
        assert_eq!(Series::zero(4).divide(&t).unwrap(), Series::zero(3));
    }

    #[test]
    fn compose_identity_and_binomial() {
        let f = s(&[(2, 1), (-1, 1), (1, 3), (0, 1)]);
        let t = Series::monomial(1, rat(1), 3);
        assert_eq!(f.compose(&t).unwrap(), f);
        // t^2 o (t + t^2) at cap 3 = t^2 + 2t^3
        let f = Series::monomial(2, rat(1), 3);
        let g = s(&[(0, 1), (1, 1), (1, 1), (0, 1)]);
        assert_eq!(f.compose(&g).unwrap(), s(&[(0, 1), (0, 1), (1, 1), (2, 1)]));
    }

    #[test]
    fn compose_log_exp_cancellation() {
        // -log(1-u) = sum u^m/m composed with u = 1 - e^{-t} gives t exactly.
        let cap = 10;
        let log = Series::from_fn(cap, |m| {
            if m == 0 {
                Rational::zero()
            } else {
                ratio(1, m as i64)
            }
        });
        let u = Series::one(cap) - Series::exp_scaled(&rat(-1), cap);
        let composed = log.compose(&u).unwrap();
        assert_eq!(composed, Series::monomial(1, rat(1), cap));
    }

    #[test]
    fn compose_requires_delta() {
        let f = Series::one(3);
        let g = Series::one(3);
        assert_eq!(f.compose(&g), Err(Error::NotDelta));
    }

    #[test]
    fn exp_scaled_values() {
        assert_eq!(Series::exp_scaled(&rat(0), 4), Series::one(4));
        assert_eq!(
            Series::exp_scaled(&rat(1), 3),
            s(&[(1, 1), (1, 1), (1, 2), (1, 6)])
        );
        assert_eq!(
            Series::exp_scaled(&rat(2), 3),
            s(&[(1, 1), (2, 1), (2, 1), (4, 3)])
        );
    }

    #[test]
    fn derivative_basics() {
        let t2 = Series::monomial(2, rat(1), 4);
        assert_eq!(t2.derivative().unwrap(), Series::monomial(1, rat(2), 3));
        assert_eq!(
            Series::constant(rat(5), 3).derivative().unwrap(),
            Series::zero(2)
        );
        let e = Series::exp_scaled(&rat(1), 4);
        assert_eq!(e.derivative().unwrap(), Series::exp_scaled(&rat(1), 3));
        assert_eq!(
            Series::one(0).derivative(),
            Err(Error::CapExhausted { cap: 0, needed: 1 })
        );
    }

    #[test]
    fn order_reporting() {
        assert_eq!(Series::zero(3).order(), None);
        assert!(Series::zero(3).is_zero_to_cap());
        assert_eq!(Series::monomial(2, rat(7), 5).order(), Some(2));
    }

    prop_compose! {
        fn arb_rational()(n in -20i64..=20, d in 1i64..=12) -> Rational {
            ratio(n, d)
        }
    }

    prop_compose! {
        fn arb_series(max_cap: usize)(cap in 0..=max_cap)
            (coeffs in prop::collection::vec(arb_rational(), cap + 1)) -> Series {
            Series::from_coeffs(coeffs)
        }
    }

    prop_compose! {
        /// A delta series: zero constant term, nonzero linear term.
        fn arb_delta(max_cap: usize)(cap in 1..=max_cap)
            (mut coeffs in prop::collection::vec(arb_rational(), cap + 1),
             lead in 1i64..=6) -> Series {
            coeffs[0] = Rational::zero();
            coeffs[1] = rat(lead);
            Series::from_coeffs(coeffs)
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_series(12), b in arb_series(12), c in arb_series(12)) {
            let ab_c = (&a * &b) * c.clone();
            let a_bc = a.clone() * (&b * &c);
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            let lhs = &a * &(&b + &c);
            let rhs = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_series(10), b in arb_series(10)) {
            let prod = &a * &b;
            prop_assume!(b.order().is_some_and(|ob| ob <= prod.cap()));
            let q = prod.divide(&b).unwrap();
            prop_assert!(q.agrees_with(&a));
        }

        #[test]
        fn composition_is_associative(
            f in arb_series(10), g in arb_delta(10), h in arb_delta(10)
        ) {
            let left = f.compose(&g).unwrap().compose(&h).unwrap();
            let right = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn exp_addition_law(a in arb_rational(), b in arb_rational()) {
            let ea = Series::exp_scaled(&a, 10);
            let eb = Series::exp_scaled(&b, 10);
            prop_assert_eq!(&ea * &eb, Series::exp_scaled(&(a + b), 10));
        }

        #[test]
        fn orders_add_under_multiplication(a in arb_series(12), b in arb_series(12)) {
            if let (Some(oa), Some(ob)) = (a.order(), b.order()) {
                let prod = &a * &b;
                if oa + ob <= prod.cap() {
                    prop_assert_eq!(prod.order(), Some(oa + ob));
                }
            }
        }
    }
}
