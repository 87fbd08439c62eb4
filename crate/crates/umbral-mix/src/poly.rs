//! Dense univariate polynomials in `x` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use crate::rational::{binomial, rational_pow, Rational};
use crate::series::fmt_terms;

/// A polynomial in canonical form: trailing zero coefficients trimmed,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(degree: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// `x^degree`.
    pub fn x_pow(degree: usize) -> Self {
        Polynomial::monomial(degree, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Constant term; for the families in this crate this is the "number"
    /// attached to the polynomial sequence.
    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative `d/dx`.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    /// `p(x + y)` by binomial re-expansion.
    pub fn shift(&self, y: &Rational) -> Polynomial {
        if y.is_zero() || self.is_zero() {
            return self.clone();
        }
        let deg = self.coeffs.len() - 1;
        let mut out = vec![Rational::zero(); deg + 1];
        // y^j table up to deg
        let mut y_pows = Vec::with_capacity(deg + 1);
        y_pows.push(Rational::one());
        for _ in 0..deg {
            y_pows.push(y_pows.last().unwrap() * y);
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for i in 0..=j {
                out[i] += c * Rational::from_integer(binomial(j, i)) * &y_pows[j - i];
            }
        }
        Polynomial::from_coeffs(out)
    }

    /// `(x - j)^l` and friends: integer power of a shifted monomial.
    pub fn linear_power(offset: &Rational, l: usize) -> Polynomial {
        // (x + offset)^l expanded binomially
        let mut coeffs = vec![Rational::zero(); l + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = Rational::from_integer(binomial(l, i)) * rational_pow(offset, (l - i) as i64);
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs, "x")
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let mut c = self.coeff(i);
                if let Some(b) = rhs.coeffs.get(i) {
                    c += b;
                }
                c
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! poly_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    )*};
}

poly_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn p(coeffs: &[(i64, i64)]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&(n, d)| ratio(n, d)).collect())
    }

    #[test]
    fn canonical_trimming() {
        let q = Polynomial::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(q.degree(), Some(0));
        assert_eq!(Polynomial::zero().degree(), None);
        assert!(Polynomial::from_coeffs(vec![rat(0)]).is_zero());
    }

    #[test]
    fn shift_examples() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = Polynomial::x_pow(2);
        assert_eq!(sq.shift(&rat(1)), p(&[(1, 1), (2, 1), (1, 1)]));
        let q = p(&[(3, 2), (-1, 3), (5, 1)]);
        assert_eq!(q.shift(&rat(0)), q);
        assert_eq!(q.shift(&ratio(2, 3)).shift(&ratio(-2, 3)), q);
    }

    #[test]
    fn eval_and_derivative() {
        let q = p(&[(1, 6), (-1, 1), (1, 1)]); // x^2 - x + 1/6
        assert_eq!(q.eval(&rat(0)), ratio(1, 6));
        assert_eq!(q.eval(&ratio(1, 2)), ratio(-1, 12));
        assert_eq!(q.derivative(), p(&[(-1, 1), (2, 1)]));
    }

    #[test]
    fn linear_powers() {
        // (x - 2)^3
        let q = Polynomial::linear_power(&rat(-2), 3);
        assert_eq!(q, p(&[(-8, 1), (12, 1), (-6, 1), (1, 1)]));
        assert_eq!(
            Polynomial::linear_power(&rat(5), 0),
            Polynomial::constant(rat(1))
        );
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(1, 1), (1, 1)]); // 1 + x
        let b = p(&[(-1, 1), (1, 1)]); // -1 + x
        assert_eq!(&a * &b, p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(&a + &b, p(&[(0, 1), (2, 1)]));
        assert_eq!(&a - &a, Polynomial::zero());
    }
}
