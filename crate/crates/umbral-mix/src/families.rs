//! Generators for the polynomial and number families: Bernoulli numbers,
//! Stirling numbers of the second kind, polylogarithm series, poly-Bernoulli
//! polynomials, Barnes multiple Bernoulli polynomials, the mixed-type family
//! combining the two, Frobenius-Euler and higher-order Bernoulli polynomials,
//! and the factorial bases.
//!
//! Every polynomial family is Appell. A generator for degree `n` builds its
//! kernel with [`CAP_GUARD`] degrees of headroom and expands through
//! [`AppellDescriptor`]; the "numbers" of a family are the constant terms of
//! its polynomials. Sequences are memoized behind a process-wide cache, so
//! sweeping a verification grid does not rebuild kernels per point.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rational_pow, Int, Rational};
use crate::series::{Series, CAP_GUARD};
use crate::umbral::AppellDescriptor;

/// First `n_max + 1` Bernoulli numbers in the `t/(e^t - 1)` convention,
/// so `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    let t = Series::monomial(1, Rational::one(), n_max + 1);
    let den = Series::exp_scaled(&Rational::one(), n_max + 1) - Series::one(n_max + 1);
    let kernel = t.divide(&den).expect("denominator has order 1");
    (0..=n_max).map(|n| kernel.egf_coeff(n)).collect()
}

/// Stirling number of the second kind `S2(l, m)`: partitions of an l-set
/// into m nonempty blocks. Zero when `m > l`.
pub fn stirling2(l: usize, m: usize) -> Rational {
    if m > l {
        return Rational::zero();
    }
    Rational::from_integer(stirling2_int(l, m))
}

fn stirling2_int(l: usize, m: usize) -> Int {
    // triangle recurrence S2(l, m) = m S2(l-1, m) + S2(l-1, m-1)
    let mut row: Vec<Int> = vec![Int::one()];
    for _ in 1..=l {
        let mut next = vec![Int::zero(); row.len() + 1];
        for (m, v) in row.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            next[m] += v * Int::from(m);
            next[m + 1] += v;
        }
        row = next;
    }
    row.get(m).cloned().unwrap_or_else(Int::zero)
}

/// Row `l` of the second-kind Stirling triangle, `m = 0..=l`.
pub fn stirling2_row(l: usize) -> Vec<Rational> {
    (0..=l).map(|m| stirling2(l, m)).collect()
}

/// The polylogarithm in its own argument: coefficients `1/m^k` of `u^m`
/// (an integer multiplier `m^-k` when `k <= 0`), zero constant term.
pub fn polylog_raw(k: i64, cap: usize) -> Series {
    Series::from_fn(cap, |m| {
        if m == 0 {
            Rational::zero()
        } else {
            rational_pow(&Rational::from_integer(m.into()), -k)
        }
    })
}

/// `Li_k(1 - e^{-t})` truncated at `cap`; has order exactly 1 for every
/// integer `k`, since the substituted series has order 1.
pub fn polylog_series(k: i64, cap: usize) -> Series {
    let u = Series::one(cap) - Series::exp_scaled(&-Rational::one(), cap);
    polylog_raw(k, cap)
        .compose(&u)
        .expect("1 - e^{-t} is a delta series")
}

/// The nonzero scale parameters `a_1 .. a_r` of a Barnes product, `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarnesParams {
    a: Vec<Rational>,
}

impl BarnesParams {
    pub fn new(a: Vec<Rational>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidParams(
                "at least one Barnes parameter is required (r >= 1)".into(),
            ));
        }
        if a.iter().any(Rational::is_zero) {
            return Err(Error::InvalidParams(
                "Barnes parameters must be nonzero".into(),
            ));
        }
        Ok(BarnesParams { a })
    }

    pub fn from_ints(a: &[i64]) -> Result<Self> {
        BarnesParams::new(a.iter().map(|&x| crate::rational::rat(x)).collect())
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    /// Number of factors in the product.
    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// The same parameters with one more factor appended.
    pub fn with_extra(&self, extra: Rational) -> Result<Self> {
        let mut a = self.a.clone();
        a.push(extra);
        BarnesParams::new(a)
    }
}

/// Index of the mixed-type family: Barnes parameters plus the
/// polylogarithm order `k` (any sign).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedFamilyKey {
    pub params: BarnesParams,
    pub k: i64,
}

impl MixedFamilyKey {
    pub fn new(params: BarnesParams, k: i64) -> Self {
        MixedFamilyKey { params, k }
    }

    /// The `(r+1, k + dk)` key with an extra unit parameter, as used by the
    /// recurrence identities.
    pub fn extended(&self, dk: i64) -> Self {
        MixedFamilyKey {
            params: self
                .params
                .with_extra(Rational::one())
                .expect("unit parameter is nonzero"),
            k: self.k + dk,
        }
    }
}

/// Appell kernel of the poly-Bernoulli family:
/// `g_k(t) = (1 - e^{-t}) / Li_k(1 - e^{-t})`, returned at exactly `cap`.
pub fn poly_bernoulli_kernel(k: i64, cap: usize) -> Series {
    let u = Series::one(cap + 1) - Series::exp_scaled(&-Rational::one(), cap + 1);
    let li = polylog_series(k, cap + 1);
    u.divide(&li).expect("polylogarithm series has order 1")
}

/// Appell kernel of the Barnes family:
/// `g_r(t) = prod_j (e^{a_j t} - 1) / t^r`, returned at exactly `cap`.
pub fn barnes_kernel(params: &BarnesParams, cap: usize) -> Series {
    let r = params.r();
    let raw_cap = cap + r;
    let mut prod = Series::one(raw_cap);
    for a in params.a() {
        prod = prod * (Series::exp_scaled(a, raw_cap) - Series::one(raw_cap));
    }
    prod.divide(&Series::monomial(r, Rational::one(), raw_cap))
        .expect("product of r unit-free factors has order r")
}

/// Appell kernel of the mixed-type family: `g_r(t) g_k(t)`.
pub fn mixed_kernel(key: &MixedFamilyKey, cap: usize) -> Series {
    barnes_kernel(&key.params, cap) * poly_bernoulli_kernel(key.k, cap)
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum CacheKey {
    PolyBernoulli { k: i64 },
    Barnes { a: Vec<Rational> },
    Mixed { a: Vec<Rational>, k: i64 },
    FrobeniusEuler { s: usize, lambda: Rational },
    HigherBernoulli { s: usize },
}

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<Vec<Polynomial>>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Vec<Polynomial>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Sequences are built with some headroom so neighbouring grid points
/// hit the cache instead of rebuilding the kernel.
const MIN_BUILD: usize = 12;

fn cached_sequence(
    key: CacheKey,
    n: usize,
    build: impl FnOnce(usize) -> Vec<Polynomial>,
) -> Vec<Polynomial> {
    if let Some(seq) = cache().lock().unwrap().get(&key) {
        if seq.len() > n {
            return seq[..=n].to_vec();
        }
    }
    let built = Arc::new(build(n.max(MIN_BUILD)));
    let mut map = cache().lock().unwrap();
    let entry = map.entry(key).or_insert_with(|| built.clone());
    if entry.len() < built.len() {
        *entry = built.clone();
    }
    built[..=n].to_vec()
}

fn appell_sequence(kernel: Series, label: String, n: usize) -> Vec<Polynomial> {
    AppellDescriptor::new(kernel, label)
        .expect("family kernels are invertible")
        .sequence(n)
        .expect("kernel built with cap headroom")
}

/// Poly-Bernoulli polynomials `B^(k)_0 .. B^(k)_n`; the values at zero are
/// the poly-Bernoulli numbers.
pub fn poly_bernoulli_sequence(n: usize, k: i64) -> Vec<Polynomial> {
    cached_sequence(CacheKey::PolyBernoulli { k }, n, |n| {
        appell_sequence(
            poly_bernoulli_kernel(k, n + CAP_GUARD),
            format!("poly-bernoulli(k={k})"),
            n,
        )
    })
}

pub fn poly_bernoulli_poly(n: usize, k: i64) -> Polynomial {
    poly_bernoulli_sequence(n, k).pop().expect("nonempty")
}

/// Barnes multiple Bernoulli polynomials `B_0(x|a) .. B_n(x|a)`.
pub fn barnes_sequence(n: usize, params: &BarnesParams) -> Vec<Polynomial> {
    let key = CacheKey::Barnes {
        a: params.a().to_vec(),
    };
    cached_sequence(key, n, |n| {
        appell_sequence(
            barnes_kernel(params, n + CAP_GUARD),
            format!("barnes(r={})", params.r()),
            n,
        )
    })
}

pub fn barnes_bernoulli_poly(n: usize, params: &BarnesParams) -> Polynomial {
    barnes_sequence(n, params).pop().expect("nonempty")
}

/// Mixed-type polynomials `S^(r,k)_0 .. S^(r,k)_n`.
pub fn mixed_sequence(n: usize, key: &MixedFamilyKey) -> Vec<Polynomial> {
    let ck = CacheKey::Mixed {
        a: key.params.a().to_vec(),
        k: key.k,
    };
    cached_sequence(ck, n, |n| {
        appell_sequence(
            mixed_kernel(key, n + CAP_GUARD),
            format!("mixed(r={},k={})", key.params.r(), key.k),
            n,
        )
    })
}

pub fn mixed_poly(n: usize, key: &MixedFamilyKey) -> Polynomial {
    mixed_sequence(n, key).pop().expect("nonempty")
}

/// The mixed-type numbers `S^(r,k)_0(a) .. S^(r,k)_n(a)` (values at zero).
pub fn mixed_numbers(n: usize, key: &MixedFamilyKey) -> Vec<Rational> {
    mixed_sequence(n, key)
        .iter()
        .map(Polynomial::constant_term)
        .collect()
}

/// Frobenius-Euler polynomials of order `s`: Appell for
/// `((e^t - lambda)/(1 - lambda))^s`, `lambda != 1`.
pub fn frobenius_euler_sequence(n: usize, s: usize, lambda: &Rational) -> Result<Vec<Polynomial>> {
    if lambda.is_one() {
        return Err(Error::InvalidParams(
            "Frobenius-Euler parameter lambda must differ from 1".into(),
        ));
    }
    let key = CacheKey::FrobeniusEuler {
        s,
        lambda: lambda.clone(),
    };
    let lambda = lambda.clone();
    Ok(cached_sequence(key, n, move |n| {
        let cap = n + CAP_GUARD;
        let scale = (Rational::one() - &lambda).recip();
        let factor = (Series::exp_scaled(&Rational::one(), cap)
            - Series::constant(lambda.clone(), cap))
        .scale(&scale);
        appell_sequence(factor.pow(s), format!("frobenius-euler(s={s})"), n)
    }))
}

pub fn frobenius_euler_poly(n: usize, s: usize, lambda: &Rational) -> Result<Polynomial> {
    Ok(frobenius_euler_sequence(n, s, lambda)?
        .pop()
        .expect("nonempty"))
}

/// Higher-order Bernoulli polynomials: Appell for `((e^t - 1)/t)^s`.
pub fn higher_bernoulli_sequence(n: usize, s: usize) -> Vec<Polynomial> {
    cached_sequence(CacheKey::HigherBernoulli { s }, n, |n| {
        let cap = n + CAP_GUARD;
        let num = Series::exp_scaled(&Rational::one(), cap + 1) - Series::one(cap + 1);
        let factor = num
            .divide(&Series::monomial(1, Rational::one(), cap + 1))
            .expect("e^t - 1 has order 1");
        appell_sequence(factor.pow(s), format!("higher-bernoulli(s={s})"), n)
    })
}

pub fn higher_bernoulli_poly(n: usize, s: usize) -> Polynomial {
    higher_bernoulli_sequence(n, s).pop().expect("nonempty")
}

/// Falling factorial `(x)_m = x (x-1) ... (x-m+1)` by direct product.
pub fn falling_factorial(m: usize) -> Polynomial {
    factorial_product(m, -1)
}

/// Rising factorial `(x)^(m) = x (x+1) ... (x+m-1)` by direct product.
pub fn rising_factorial(m: usize) -> Polynomial {
    factorial_product(m, 1)
}

fn factorial_product(m: usize, step: i64) -> Polynomial {
    let mut acc = Polynomial::constant(Rational::one());
    for i in 0..m as i64 {
        let root = Polynomial::from_coeffs(vec![
            Rational::from_integer((step * i).into()),
            Rational::one(),
        ]);
        acc = acc * root;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::umbral::operator_apply;

    /// Bernoulli numbers from the defining recurrence
    /// `sum_{j=0}^{n} C(n+1, j) B_j = 0`, `B_0 = 1`.
    fn bernoulli_by_recurrence(n_max: usize) -> Vec<Rational> {
        let mut b = vec![Rational::one()];
        for n in 1..=n_max {
            let mut acc = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += Rational::from_integer(crate::rational::binomial(n + 1, j)) * bj;
            }
            b.push(-acc / Rational::from_integer((n as i64 + 1).into()));
        }
        b
    }

    #[test]
    fn bernoulli_matches_recurrence() {
        let got = bernoulli_numbers(12);
        assert_eq!(got, bernoulli_by_recurrence(12));
        assert_eq!(
            &got[..5],
            &[rat(1), ratio(-1, 2), ratio(1, 6), rat(0), ratio(-1, 30)]
        );
        for m in 1..=5 {
            assert_eq!(
                got[2 * m + 1],
                rat(0),
                "odd Bernoulli number B_{}",
                2 * m + 1
            );
        }
    }

    /// Count partitions of an l-set into m blocks by direct recursion,
    /// independent of the triangle recurrence.
    fn partition_count(l: usize, m: usize) -> u64 {
        if l == 0 {
            return u64::from(m == 0);
        }
        if m == 0 || m > l {
            return 0;
        }
        partition_count(l - 1, m - 1) + m as u64 * partition_count(l - 1, m)
    }

    #[test]
    fn stirling2_matches_partition_enumeration() {
        for l in 0..=9usize {
            for m in 0..=9usize {
                assert_eq!(stirling2(l, m), rat(partition_count(l, m) as i64));
            }
        }
        assert_eq!(stirling2(4, 2), rat(7));
        assert_eq!(
            stirling2_row(4),
            vec![rat(0), rat(1), rat(7), rat(6), rat(1)]
        );
    }

    #[test]
    fn stirling2_matches_series_definition() {
        // (e^t - 1)^m = m! sum_l S2(l, m) t^l / l!
        let cap = 12;
        let e = Series::exp_scaled(&rat(1), cap) - Series::one(cap);
        for m in 0..=cap {
            let pw = e.pow(m);
            let m_fact = Rational::from_integer(crate::rational::factorial(m));
            for l in 0..=cap {
                assert_eq!(pw.egf_coeff(l) / &m_fact, stirling2(l, m), "l={l} m={m}");
            }
        }
    }

    #[test]
    fn polylog_closed_forms() {
        // Li_1(1 - e^{-t}) = t
        assert_eq!(polylog_series(1, 8), Series::monomial(1, rat(1), 8));
        // Li_0(1 - e^{-t}) = e^t - 1
        assert_eq!(
            polylog_series(0, 8),
            Series::exp_scaled(&rat(1), 8) - Series::one(8)
        );
    }

    #[test]
    fn polylog_small_cap_against_direct_sum() {
        // k = 2, cap = 3: sum_{m=1}^{3} (1 - e^{-t})^m / m^2 directly
        let cap = 3;
        let u = Series::one(cap) - Series::exp_scaled(&rat(-1), cap);
        let mut want = Series::zero(cap);
        for m in 1..=cap {
            want = want + u.pow(m).scale(&ratio(1, (m * m) as i64));
        }
        assert_eq!(polylog_series(2, cap), want);
    }

    #[test]
    fn polylog_derivative_steps_down_in_k() {
        // u d/du Li_k(u) = Li_{k-1}(u) as raw series in u
        for k in -2..=3i64 {
            let li = polylog_raw(k, 12);
            let stepped = Series::monomial(1, rat(1), 11) * li.derivative().unwrap();
            assert!(stepped.agrees_with(&polylog_raw(k - 1, 12)), "k={k}");
        }
    }

    fn classical_bernoulli(n: usize) -> Vec<Polynomial> {
        higher_bernoulli_sequence(n, 1)
    }

    #[test]
    fn poly_bernoulli_at_k1_is_shifted_classical() {
        // t/(1 - e^{-t}) = (t/(e^t - 1)) e^t, so B^(1)_n(x) = B_n(x + 1)
        let classical = classical_bernoulli(8);
        for (n, b) in poly_bernoulli_sequence(8, 1).iter().enumerate() {
            assert_eq!(*b, classical[n].shift(&rat(1)), "n={n}");
        }
    }

    #[test]
    fn poly_bernoulli_basics() {
        for k in [-2, -1, 0, 1, 3] {
            assert_eq!(poly_bernoulli_poly(0, k), Polynomial::constant(rat(1)));
            // B^(k)_1(x) = x + 2^{-k}
            let want = Polynomial::from_coeffs(vec![rational_pow(&rat(2), -k), rat(1)]);
            assert_eq!(poly_bernoulli_poly(1, k), want, "k={k}");
        }
    }

    #[test]
    fn barnes_with_unit_parameter_is_classical() {
        let params = BarnesParams::from_ints(&[1]).unwrap();
        let classical = classical_bernoulli(8);
        for (n, b) in barnes_sequence(8, &params).iter().enumerate() {
            assert_eq!(*b, classical[n], "n={n}");
        }
    }

    #[test]
    fn barnes_constant_is_reciprocal_product() {
        let params = BarnesParams::new(vec![ratio(1, 2), rat(3), rat(-2)]).unwrap();
        // product of the leading coefficients of e^{a_j t} - 1 is a_1 a_2 a_3
        assert_eq!(
            barnes_bernoulli_poly(0, &params),
            Polynomial::constant(ratio(-1, 3))
        );
    }

    #[test]
    fn barnes_doubling_rescales_classical() {
        // B_n(x | 2) = 2^{n-1} B_n(x/2)
        let params = BarnesParams::from_ints(&[2]).unwrap();
        let classical = classical_bernoulli(6);
        for (n, b) in barnes_sequence(6, &params).iter().enumerate() {
            let halved = Polynomial::from_coeffs(
                classical[n]
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(j, c)| c * rational_pow(&ratio(1, 2), j as i64))
                    .collect(),
            );
            let want = halved.scale(&rational_pow(&rat(2), n as i64 - 1));
            assert_eq!(*b, want, "n={n}");
        }
    }

    #[test]
    fn barnes_rejects_bad_params() {
        assert!(BarnesParams::new(vec![]).is_err());
        assert!(BarnesParams::new(vec![rat(1), rat(0)]).is_err());
    }

    #[test]
    fn mixed_at_unit_params_is_order_two_bernoulli_shifted() {
        // (t/(e^t-1)) (t/(1-e^{-t})) = (t/(e^t-1))^2 e^t
        let key = MixedFamilyKey::new(BarnesParams::from_ints(&[1]).unwrap(), 1);
        let order2 = higher_bernoulli_sequence(8, 2);
        for (n, s) in mixed_sequence(8, &key).iter().enumerate() {
            assert_eq!(*s, order2[n].shift(&rat(1)), "n={n}");
        }
    }

    #[test]
    fn mixed_constant_and_permutation_invariance() {
        let key = MixedFamilyKey::new(BarnesParams::new(vec![rat(1), rat(2)]).unwrap(), 1);
        assert_eq!(mixed_poly(0, &key), Polynomial::constant(ratio(1, 2)));

        let a = vec![ratio(1, 2), rat(3), rat(2)];
        let mut perm = a.clone();
        perm.rotate_left(1);
        for k in [-1, 2] {
            let k1 = MixedFamilyKey::new(BarnesParams::new(a.clone()).unwrap(), k);
            let k2 = MixedFamilyKey::new(BarnesParams::new(perm.clone()).unwrap(), k);
            assert_eq!(mixed_sequence(6, &k1), mixed_sequence(6, &k2));
        }
    }

    #[test]
    fn families_satisfy_appell_derivative_rule() {
        let t = Series::monomial(1, rat(1), 12);
        let key = MixedFamilyKey::new(BarnesParams::new(vec![rat(1), ratio(1, 2)]).unwrap(), -1);
        let sequences = [
            poly_bernoulli_sequence(12, -1),
            barnes_sequence(12, &key.params),
            mixed_sequence(12, &key),
            frobenius_euler_sequence(12, 2, &rat(2)).unwrap(),
            higher_bernoulli_sequence(12, 3),
        ];
        for seq in &sequences {
            for n in 1..seq.len() {
                let got = operator_apply(&t, &seq[n]).unwrap();
                assert_eq!(got, seq[n - 1].scale(&rat(n as i64)));
            }
        }
    }

    #[test]
    fn frobenius_euler_values() {
        let lambda = ratio(1, 3);
        for n in 0..=6 {
            assert_eq!(
                frobenius_euler_poly(n, 0, &lambda).unwrap(),
                Polynomial::x_pow(n)
            );
        }
        assert_eq!(
            frobenius_euler_poly(0, 3, &lambda).unwrap(),
            Polynomial::constant(rat(1))
        );
        // H^(1)_1(x | lambda) = x - 1/(1 - lambda)
        let want = Polynomial::from_coeffs(vec![-(rat(1) - &lambda).recip(), rat(1)]);
        assert_eq!(frobenius_euler_poly(1, 1, &lambda).unwrap(), want);
        assert!(frobenius_euler_poly(2, 1, &rat(1)).is_err());
    }

    #[test]
    fn higher_bernoulli_values() {
        for n in 0..=6 {
            assert_eq!(higher_bernoulli_poly(n, 0), Polynomial::x_pow(n));
        }
        for s in 1..=4usize {
            // first-degree polynomial is x - s/2
            let want = Polynomial::from_coeffs(vec![ratio(-(s as i64), 2), rat(1)]);
            assert_eq!(higher_bernoulli_poly(1, s), want);
        }
    }

    #[test]
    fn factorial_bases() {
        assert_eq!(
            falling_factorial(2),
            Polynomial::from_coeffs(vec![rat(0), rat(-1), rat(1)])
        );
        assert_eq!(
            rising_factorial(2),
            Polynomial::from_coeffs(vec![rat(0), rat(1), rat(1)])
        );
        assert_eq!(falling_factorial(0), Polynomial::constant(rat(1)));
        for m in 0..=8usize {
            assert_eq!(
                falling_factorial(m).eval(&rat(m as i64)),
                Rational::from_integer(crate::rational::factorial(m))
            );
        }
    }

    #[test]
    fn mixed_kernel_inverse_factors() {
        // 1/g_{r,k} = (1/g_r)(1/g_k) exactly
        let key = MixedFamilyKey::new(BarnesParams::new(vec![rat(2), ratio(1, 2)]).unwrap(), -2);
        let cap = 10;
        let one = Series::one(cap);
        let inv_mixed = one.divide(&mixed_kernel(&key, cap)).unwrap();
        let inv_barnes = one.divide(&barnes_kernel(&key.params, cap)).unwrap();
        let inv_pb = one.divide(&poly_bernoulli_kernel(key.k, cap)).unwrap();
        assert_eq!(inv_mixed, &inv_barnes * &inv_pb);
    }
}
