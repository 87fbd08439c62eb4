//! The coefficient field: arbitrary-precision rationals.
//!
//! `Rational` is `num`'s `BigRational`, which keeps every value in canonical
//! form (gcd(|p|, q) = 1, q > 0, zero is 0/1) and renders as `p/q`, or plain
//! `p` when the denominator is one. That rendering round-trips through
//! [`parse_rational`], and it is the wire format used by the CLI.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

pub type Rational = BigRational;
pub type Int = BigInt;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// The fraction n/d in canonical form. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Parse a canonical `p/q` or `p` literal.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational literal".to_string());
    }
    match s.split_once('/') {
        None => s
            .parse::<Int>()
            .map(Rational::from_integer)
            .map_err(|_| format!("unparseable rational literal `{s}`")),
        Some((num, den)) => {
            let num: Int = num
                .parse()
                .map_err(|_| format!("unparseable rational literal `{s}`"))?;
            let den: Int = den
                .parse()
                .map_err(|_| format!("unparseable rational literal `{s}`"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{s}`"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// base^exp for a signed integer exponent. Panics on 0^negative.
pub fn rational_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mag = u32::try_from(exp.unsigned_abs()).expect("exponent magnitude fits in u32");
    let num = base.numer().pow(mag);
    let den = base.denom().pow(mag);
    if exp > 0 {
        Rational::new_raw(num, den)
    } else {
        assert!(!base.is_zero(), "zero base with negative exponent");
        // new_raw is fine: pow preserves coprimality, but the sign must
        // move back to the numerator.
        if num.sign() == Sign::Minus {
            Rational::new_raw(-den, -num)
        } else {
            Rational::new_raw(den, num)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(ratio(0, 7), rat(0));
        assert_eq!(ratio(-3, -6).to_string(), "1/2");
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "7", "-1/2", "22/7", "-1000000000000000001/3"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(v.to_string(), s);
            assert_eq!(parse_rational(&v.to_string()).unwrap(), v);
        }
        // non-canonical input parses to canonical form
        assert_eq!(parse_rational("4/6").unwrap().to_string(), "2/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn binomial_triangle() {
        assert_eq!(binomial(0, 0), Int::from(1));
        assert_eq!(binomial(4, 2), Int::from(6));
        assert_eq!(binomial(10, 3), Int::from(120));
        assert_eq!(binomial(3, 5), Int::from(0));
        for n in 1..20usize {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn signed_powers() {
        assert_eq!(rational_pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(rational_pow(&ratio(2, 3), -2), ratio(9, 4));
        assert_eq!(rational_pow(&ratio(-1, 2), -3), rat(-8));
        assert_eq!(rational_pow(&rat(5), 0), rat(1));
    }
}
