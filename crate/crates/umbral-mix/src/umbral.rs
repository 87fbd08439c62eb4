//! Series acting on polynomials: linear functionals, operators, Appell
//! sequences and connection coefficients.
//!
//! A series `f(t)` pairs with a polynomial through `<f | x^n> = n! [t^n] f`,
//! and acts on it as the differential operator `sum_k [t^k]f d^k/dx^k`.
//! Every polynomial family generated here is Appell: it is produced by an
//! invertible kernel `g(t)` alone, with `t` itself as the delta series.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{binomial, factorial, Rational};
use crate::series::Series;

/// `<f(t) | p(x)> = sum_n p_n n! [t^n] f`, linear in both arguments.
pub fn functional_apply(f: &Series, p: &Polynomial) -> Result<Rational> {
    let Some(deg) = p.degree() else {
        return Ok(Rational::zero());
    };
    if f.cap() < deg {
        return Err(Error::CapExhausted {
            cap: f.cap(),
            needed: deg,
        });
    }
    let mut acc = Rational::zero();
    let mut fact = Rational::one();
    for (n, c) in p.coeffs().iter().enumerate() {
        if n > 0 {
            fact *= Rational::from_integer(n.into());
        }
        if !c.is_zero() && !f.coeff(n).is_zero() {
            acc += c * &fact * f.coeff(n);
        }
    }
    Ok(acc)
}

/// `f(t)` as an operator: `t^k` differentiates `k` times, so
/// `f(t) p(x) = sum_k [t^k]f p^(k)(x)`. The degree never increases.
pub fn operator_apply(f: &Series, p: &Polynomial) -> Result<Polynomial> {
    let Some(deg) = p.degree() else {
        return Ok(Polynomial::zero());
    };
    if f.cap() < deg {
        return Err(Error::CapExhausted {
            cap: f.cap(),
            needed: deg,
        });
    }
    let mut acc = Polynomial::zero();
    let mut dk = p.clone();
    for k in 0..=deg {
        if !f.coeff(k).is_zero() {
            acc = acc + dk.scale(f.coeff(k));
        }
        dk = dk.derivative();
    }
    Ok(acc)
}

/// An invertible kernel `g(t)` describing the Appell sequence `s_n` with
/// generating function `e^(xt) / g(t)`.
#[derive(Clone, Debug)]
pub struct AppellDescriptor {
    g: Series,
    label: String,
}

impl AppellDescriptor {
    pub fn new(g: Series, label: impl Into<String>) -> Result<Self> {
        if g.coeff(0).is_zero() {
            return Err(Error::InvalidParams(
                "Appell kernel must be invertible (nonzero constant term)".into(),
            ));
        }
        Ok(AppellDescriptor {
            g,
            label: label.into(),
        })
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `s_n(x) = sum_j C(n,j) m_{n-j} x^j` where `m_i = i! [t^i] (1/g)`.
    /// Monic exactly when `g(0) = 1`; the leading coefficient is `1/g(0)`.
    pub fn polynomial(&self, n: usize) -> Result<Polynomial> {
        Ok(self.sequence(n)?.pop().expect("sequence is nonempty"))
    }

    /// All of `s_0 .. s_n`, inverting the kernel once.
    pub fn sequence(&self, n: usize) -> Result<Vec<Polynomial>> {
        if self.g.cap() < n {
            return Err(Error::CapExhausted {
                cap: self.g.cap(),
                needed: n,
            });
        }
        let inv = Series::one(self.g.cap())
            .divide(&self.g)
            .expect("kernel is invertible");
        let moments: Vec<Rational> = (0..=n).map(|i| inv.egf_coeff(i)).collect();
        let mut seq = Vec::with_capacity(n + 1);
        for degree in 0..=n {
            let coeffs = (0..=degree)
                .map(|j| Rational::from_integer(binomial(degree, j)) * &moments[degree - j])
                .collect();
            seq.push(Polynomial::from_coeffs(coeffs));
        }
        Ok(seq)
    }
}

/// A Sheffer pair `(h(t), l(t))` used as an expansion basis: `h` invertible,
/// `l` a delta series with nonzero linear term.
#[derive(Clone, Debug)]
pub struct ShefferTarget {
    h: Series,
    l: Series,
    label: String,
}

impl ShefferTarget {
    pub fn new(h: Series, l: Series, label: impl Into<String>) -> Result<Self> {
        if h.coeff(0).is_zero() {
            return Err(Error::InvalidParams(
                "target kernel must be invertible".into(),
            ));
        }
        if !l.coeff(0).is_zero() || l.cap() < 1 || l.coeff(1).is_zero() {
            return Err(Error::InvalidParams(
                "target delta series must have order exactly 1".into(),
            ));
        }
        Ok(ShefferTarget {
            h,
            l,
            label: label.into(),
        })
    }

    pub fn h(&self) -> &Series {
        &self.h
    }

    pub fn l(&self) -> &Series {
        &self.l
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Change of basis from the Appell sequence of `source_g` to the Sheffer
/// sequence of `target`: row `i` of the result expands `s_i` as
/// `s_i(x) = sum_m C[i][m] r_m(x)`, with
/// `C[i][m] = <(h/g) l^m | x^i> / m!`.
///
/// The matrix is lower triangular with nonzero diagonal. For a general
/// Sheffer source `(g, f)` the same pairing holds with the compositional
/// inverse of `f` substituted into `h`, `g` and `l`; every source in this
/// crate is Appell (`f = t`, its own inverse), so only that case is
/// implemented.
pub fn connection_coefficients(
    source_g: &Series,
    target: &ShefferTarget,
    n: usize,
) -> Result<Vec<Vec<Rational>>> {
    let cap = source_g.cap().min(target.h.cap()).min(target.l.cap());
    if cap < n {
        return Err(Error::CapExhausted { cap, needed: n });
    }
    let base = target.h.divide(source_g)?;
    let mut rows = vec![vec![Rational::zero(); n + 1]; n + 1];
    let mut l_pow = Series::one(base.cap());
    for m in 0..=n {
        let term = &base * &l_pow;
        let m_fact = Rational::from_integer(factorial(m));
        for (i, row) in rows.iter_mut().enumerate() {
            row[m] = term.egf_coeff(i) / &m_fact;
        }
        l_pow = l_pow * &target.l;
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use proptest::prelude::*;

    fn t_series(cap: usize) -> Series {
        Series::monomial(1, rat(1), cap)
    }

    #[test]
    fn pairing_is_kronecker_on_monomials() {
        // <t^k | x^n> = n! delta_{n,k}
        for n in 0..6usize {
            for k in 0..6usize {
                let f = Series::monomial(k, rat(1), 8);
                let got = functional_apply(&f, &Polynomial::x_pow(n)).unwrap();
                let want = if n == k {
                    Rational::from_integer(factorial(n))
                } else {
                    rat(0)
                };
                assert_eq!(got, want, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pairing_with_exponential_evaluates() {
        // <e^{yt} | x^n> = y^n
        let y = ratio(3, 2);
        let f = Series::exp_scaled(&y, 8);
        for n in 0..=8usize {
            let got = functional_apply(&f, &Polynomial::x_pow(n)).unwrap();
            assert_eq!(got, crate::rational::rational_pow(&y, n as i64));
        }
    }

    #[test]
    fn pairing_bernoulli_kernel() {
        // <t/(e^t - 1) | x^2> = B_2 = 1/6, with the value pinned by the
        // defining recurrence sum_{j<=n} C(n+1,j) B_j = 0.
        let t = t_series(5);
        let den = Series::exp_scaled(&rat(1), 5) - Series::one(5);
        let kernel = t.divide(&den).unwrap();
        let got = functional_apply(&kernel, &Polynomial::x_pow(2)).unwrap();
        assert_eq!(got, ratio(1, 6));
    }

    #[test]
    fn pairing_requires_enough_cap() {
        let f = Series::one(2);
        let p = Polynomial::x_pow(5);
        assert_eq!(
            functional_apply(&f, &p),
            Err(Error::CapExhausted { cap: 2, needed: 5 })
        );
    }

    #[test]
    fn operator_differentiates_and_shifts() {
        let x3 = Polynomial::x_pow(3);
        let d = operator_apply(&t_series(4), &x3).unwrap();
        assert_eq!(d, Polynomial::monomial(2, rat(3)));

        // e^{yt} p(x) = p(x + y)
        let y = rat(2);
        let p = Polynomial::from_coeffs(vec![rat(1), rat(-1), rat(1)]);
        let shifted = operator_apply(&Series::exp_scaled(&y, 4), &p).unwrap();
        assert_eq!(shifted, p.shift(&y));

        // (1 - e^{-t}) x^2 = x^2 - (x-1)^2 = 2x - 1
        let f = Series::one(4) - Series::exp_scaled(&rat(-1), 4);
        let got = operator_apply(&f, &Polynomial::x_pow(2)).unwrap();
        assert_eq!(got, Polynomial::from_coeffs(vec![rat(-1), rat(2)]));
    }

    fn bernoulli_descriptor(cap: usize) -> AppellDescriptor {
        // g = (e^t - 1)/t, the kernel of the classical Bernoulli polynomials
        let num = Series::exp_scaled(&rat(1), cap + 1) - Series::one(cap + 1);
        let g = num.divide(&Series::monomial(1, rat(1), cap + 1)).unwrap();
        AppellDescriptor::new(g, "bernoulli").unwrap()
    }

    #[test]
    fn appell_bernoulli_quadratic() {
        let d = bernoulli_descriptor(6);
        assert_eq!(
            d.polynomial(2).unwrap(),
            Polynomial::from_coeffs(vec![ratio(1, 6), rat(-1), rat(1)])
        );
        assert_eq!(d.polynomial(0).unwrap(), Polynomial::constant(rat(1)));
    }

    #[test]
    fn appell_trivial_kernel_gives_monomials() {
        let d = AppellDescriptor::new(Series::one(8), "monomials").unwrap();
        for n in 0..=8 {
            assert_eq!(d.polynomial(n).unwrap(), Polynomial::x_pow(n));
        }
    }

    #[test]
    fn appell_derivative_rule() {
        let d = bernoulli_descriptor(12);
        let seq = d.sequence(12).unwrap();
        for n in 1..=12usize {
            let got = operator_apply(&t_series(12), &seq[n]).unwrap();
            assert_eq!(got, seq[n - 1].scale(&rat(n as i64)));
        }
    }

    #[test]
    fn appell_rejects_non_invertible_kernel() {
        assert!(AppellDescriptor::new(Series::monomial(1, rat(1), 4), "bad").is_err());
    }

    #[test]
    fn connection_to_self_is_identity() {
        let target = ShefferTarget::new(Series::one(6), t_series(6), "monomials").unwrap();
        let c = connection_coefficients(&Series::one(6), &target, 4).unwrap();
        for (i, row) in c.iter().enumerate() {
            for (m, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == m { rat(1) } else { rat(0) });
            }
        }
    }

    /// Count the partitions of an n-set into m nonempty blocks directly.
    fn partitions_into_blocks(n: usize, m: usize) -> u64 {
        fn go(remaining: usize, blocks: usize) -> u64 {
            if remaining == 0 {
                return u64::from(blocks == 0);
            }
            if blocks == 0 || blocks > remaining {
                return 0;
            }
            // last element: own block, or joins one of `blocks` blocks
            go(remaining - 1, blocks - 1) + blocks as u64 * go(remaining - 1, blocks)
        }
        go(n, m)
    }

    #[test]
    fn connection_to_falling_factorials_counts_partitions() {
        // expanding x^n over the falling factorials gives the
        // second-kind Stirling triangle
        let cap = 8;
        let l = Series::exp_scaled(&rat(1), cap) - Series::one(cap);
        let target = ShefferTarget::new(Series::one(cap), l, "falling").unwrap();
        let c = connection_coefficients(&Series::one(cap), &target, 6).unwrap();
        for n in 0..=6usize {
            for m in 0..=6usize {
                assert_eq!(
                    c[n][m],
                    rat(partitions_into_blocks(n, m) as i64),
                    "n={n} m={m}"
                );
            }
        }
        // row 2 reads x^2 = 0 + (x)_1 + (x)_2
        assert_eq!(&c[2][..3], &[rat(0), rat(1), rat(1)]);
    }

    prop_compose! {
        fn arb_rational()(n in -12i64..=12, d in 1i64..=8) -> Rational {
            ratio(n, d)
        }
    }

    prop_compose! {
        fn arb_poly(max_deg: usize)(deg in 0..=max_deg)
            (coeffs in prop::collection::vec(arb_rational(), deg + 1)) -> Polynomial {
            Polynomial::from_coeffs(coeffs)
        }
    }

    prop_compose! {
        fn arb_series(cap: usize)(coeffs in prop::collection::vec(arb_rational(), cap + 1)) -> Series {
            Series::from_coeffs(coeffs)
        }
    }

    proptest! {
        #[test]
        fn pairing_is_bilinear(
            f in arb_series(10), g in arb_series(10), p in arb_poly(10), q in arb_poly(10),
            alpha in arb_rational(), beta in arb_rational()
        ) {
            let combo = f.scale(&alpha) + g.scale(&beta);
            let lhs = functional_apply(&combo, &p).unwrap();
            let rhs = alpha.clone() * functional_apply(&f, &p).unwrap()
                + beta.clone() * functional_apply(&g, &p).unwrap();
            prop_assert_eq!(lhs, rhs);

            let combo_p = p.scale(&alpha) + q.scale(&beta);
            let lhs = functional_apply(&f, &combo_p).unwrap();
            let rhs = alpha * functional_apply(&f, &p).unwrap()
                + beta * functional_apply(&f, &q).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pairing_is_adjoint_to_operator(
            f in arb_series(10), g in arb_series(10), p in arb_poly(10)
        ) {
            // <f g | p> = <f | g p>
            let lhs = functional_apply(&(&f * &g), &p).unwrap();
            let rhs = functional_apply(&f, &operator_apply(&g, &p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn shift_agrees_with_exponential_operator(p in arb_poly(10), y in arb_rational()) {
            let via_operator = operator_apply(&Series::exp_scaled(&y, 10), &p).unwrap();
            prop_assert_eq!(via_operator, p.shift(&y));
        }
    }
}
