//! Executable identity checks for the mixed-type family.
//!
//! Each verifier computes a left side and a right side through disjoint call
//! paths and reports exact coefficientwise equality. The right sides are
//! assembled from lower-degree members of the sequences and from auxiliary
//! families (Bernoulli numbers, Stirling numbers, factorial bases, ...);
//! they never echo the polynomial under test.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::families::{
    barnes_sequence, bernoulli_numbers, falling_factorial, frobenius_euler_sequence,
    higher_bernoulli_sequence, mixed_numbers, mixed_poly, mixed_sequence, poly_bernoulli_sequence,
    rising_factorial, stirling2, MixedFamilyKey,
};
use crate::poly::Polynomial;
use crate::rational::{binomial, rational_pow, Rational};

mod grid;

pub use grid::{run_suite, Grid, Suite};

/// Label of one identity check. `T1a`..`T1e` are the five explicit
/// expansions, `T4Remark` the re-indexed form of the degree-lowering
/// recurrence, and the rest follow the verification suites one-to-one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    T1a,
    T1b,
    T1c,
    T1d,
    T1e,
    T2,
    T3,
    T4,
    T4Remark,
    T5,
    T6,
    T7,
    T8,
    T9,
}

impl IdentityId {
    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::T1a => "T1a",
            IdentityId::T1b => "T1b",
            IdentityId::T1c => "T1c",
            IdentityId::T1d => "T1d",
            IdentityId::T1e => "T1e",
            IdentityId::T2 => "T2",
            IdentityId::T3 => "T3",
            IdentityId::T4 => "T4",
            IdentityId::T4Remark => "T4remark",
            IdentityId::T5 => "T5",
            IdentityId::T6 => "T6",
            IdentityId::T7 => "T7",
            IdentityId::T8 => "T8",
            IdentityId::T9 => "T9",
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The grid point a report was produced at.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CheckParams {
    pub n: usize,
    pub r: usize,
    pub k: i64,
    pub a: Vec<Rational>,
    pub y: Option<Rational>,
    pub s: Option<usize>,
    pub lambda: Option<Rational>,
}

impl CheckParams {
    pub fn new(n: usize, key: &MixedFamilyKey) -> Self {
        CheckParams {
            n,
            r: key.params.r(),
            k: key.k,
            a: key.params.a().to_vec(),
            y: None,
            s: None,
            lambda: None,
        }
    }

    fn with_y(mut self, y: &Rational) -> Self {
        self.y = Some(y.clone());
        self
    }

    fn with_s(mut self, s: usize) -> Self {
        self.s = Some(s);
        self
    }

    fn with_lambda(mut self, lambda: &Rational) -> Self {
        self.lambda = Some(lambda.clone());
        self
    }
}

/// One side of a comparison: a polynomial identity or a scalar one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Poly(Polynomial),
    Scalar(Rational),
}

/// First coefficient index at which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstDiff {
    pub index: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Outcome of one identity check at one grid point.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: CheckParams,
    pub lhs: Side,
    pub rhs: Side,
    pub equal: bool,
    pub first_diff: Option<FirstDiff>,
}

impl IdentityReport {
    /// Compare two polynomials coefficientwise.
    pub fn of_polys(id: IdentityId, params: CheckParams, lhs: Polynomial, rhs: Polynomial) -> Self {
        let top = lhs.coeffs().len().max(rhs.coeffs().len());
        let first_diff = (0..top)
            .find(|&i| lhs.coeff(i) != rhs.coeff(i))
            .map(|i| FirstDiff {
                index: i,
                lhs: lhs.coeff(i),
                rhs: rhs.coeff(i),
            });
        IdentityReport {
            id,
            params,
            equal: first_diff.is_none(),
            first_diff,
            lhs: Side::Poly(lhs),
            rhs: Side::Poly(rhs),
        }
    }

    /// Compare two scalars.
    pub fn of_scalars(id: IdentityId, params: CheckParams, lhs: Rational, rhs: Rational) -> Self {
        let first_diff = (lhs != rhs).then(|| FirstDiff {
            index: 0,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        });
        IdentityReport {
            id,
            params,
            equal: first_diff.is_none(),
            first_diff,
            lhs: Side::Scalar(lhs),
            rhs: Side::Scalar(rhs),
        }
    }

    fn sort_key(&self) -> (IdentityId, &CheckParams) {
        (self.id, &self.params)
    }
}

/// Deterministic report order: identity label, then grid point.
pub fn sort_reports(reports: &mut [IdentityReport]) {
    reports.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn neg_one_pow(e: usize) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The five explicit expansions of `S_n`: over poly-Bernoulli polynomials
/// weighted by Barnes numbers, over Barnes polynomials weighted by
/// poly-Bernoulli numbers, over shifted monomials `(x-j)^l`, over plain
/// monomials with Stirling weights, and over monomials with the family's
/// own numbers.
pub fn verify_explicit(n: usize, key: &MixedFamilyKey) -> Vec<IdentityReport> {
    let s_seq = mixed_sequence(n, key);
    let lhs = &s_seq[n];
    let barnes = barnes_sequence(n, &key.params);
    let pb = poly_bernoulli_sequence(n, key.k);
    let barnes_nums: Vec<Rational> = barnes.iter().map(Polynomial::constant_term).collect();
    let pb_nums: Vec<Rational> = pb.iter().map(Polynomial::constant_term).collect();
    let s_nums: Vec<Rational> = s_seq.iter().map(Polynomial::constant_term).collect();
    let params = CheckParams::new(n, key);

    let mut rhs_a = Polynomial::zero();
    let mut rhs_b = Polynomial::zero();
    for l in 0..=n {
        let c = binom(n, l);
        rhs_a = rhs_a + pb[l].scale(&(&c * &barnes_nums[n - l]));
        rhs_b = rhs_b + barnes[l].scale(&(&c * &pb_nums[n - l]));
    }

    // sum over m of (m+1)^{-k} times the m-th finite difference applied to
    // the Barnes expansion of x^n in shifted powers (x-j)^l
    let mut rhs_c = Polynomial::zero();
    for m in 0..=n {
        let weight = rational_pow(&Rational::from_integer((m as i64 + 1).into()), -key.k);
        for j in 0..=m {
            let sign = neg_one_pow(j) * binom(m, j) * &weight;
            let mut inner = Polynomial::zero();
            let offset = -Rational::from_integer((j as i64).into());
            for l in 0..=n {
                let c = binom(n, l) * &barnes_nums[n - l];
                inner = inner + Polynomial::linear_power(&offset, l).scale(&c);
            }
            rhs_c = rhs_c + inner.scale(&sign);
        }
    }

    let mut rhs_d = Polynomial::zero();
    for l in 0..=n {
        let mut coeff = Rational::zero();
        for j in l..=n {
            for m in 0..=n - j {
                let mut term = neg_one_pow(n - m - j) * binom(n, j) * binom(j, l);
                term *= Rational::from_integer(crate::rational::factorial(m))
                    * rational_pow(&Rational::from_integer((m as i64 + 1).into()), -key.k);
                term *= stirling2(n - j, m) * &barnes_nums[j - l];
                coeff += term;
            }
        }
        rhs_d = rhs_d + Polynomial::monomial(l, coeff);
    }

    let mut rhs_e = Polynomial::zero();
    for j in 0..=n {
        rhs_e = rhs_e + Polynomial::monomial(j, binom(n, j) * &s_nums[n - j]);
    }

    vec![
        IdentityReport::of_polys(IdentityId::T1a, params.clone(), lhs.clone(), rhs_a),
        IdentityReport::of_polys(IdentityId::T1b, params.clone(), lhs.clone(), rhs_b),
        IdentityReport::of_polys(IdentityId::T1c, params.clone(), lhs.clone(), rhs_c),
        IdentityReport::of_polys(IdentityId::T1d, params.clone(), lhs.clone(), rhs_d),
        IdentityReport::of_polys(IdentityId::T1e, params, lhs.clone(), rhs_e),
    ]
}

/// Binomial shift rule: `S_n(x + y0)` against the convolution of lower
/// members with powers of `y0`. Equality is checked as polynomials in `x`,
/// plus a spot evaluation at `x0` (implied by the polynomial identity).
pub fn verify_sheffer(
    n: usize,
    key: &MixedFamilyKey,
    x0: &Rational,
    y0: &Rational,
) -> IdentityReport {
    let s_seq = mixed_sequence(n, key);
    let lhs = s_seq[n].shift(y0);
    let mut rhs = Polynomial::zero();
    for j in 0..=n {
        let c = binom(n, j) * rational_pow(y0, (n - j) as i64);
        rhs = rhs + s_seq[j].scale(&c);
    }
    debug_assert_eq!(lhs.eval(x0), rhs.eval(x0));
    IdentityReport::of_polys(
        IdentityId::T2,
        CheckParams::new(n, key).with_y(y0),
        lhs,
        rhs,
    )
}

/// Right side of the degree-raising recurrence: produces `S_{n+1}` from
/// `S_0..S_n`, ordinary Bernoulli numbers, and the two `(r+1)`-parameter
/// families with a unit parameter appended.
pub fn recurrence_rhs(n: usize, key: &MixedFamilyKey) -> Polynomial {
    let s_seq = mixed_sequence(n, key);
    let bern = bernoulli_numbers(n + 1);
    let inv_np1 = Rational::from_integer((n as i64 + 1).into()).recip();

    let mut rhs = Polynomial::x_pow(1) * &s_seq[n];
    for a_j in key.params.a() {
        for (l, s_l) in s_seq.iter().enumerate() {
            let c = binom(n + 1, l)
                * rational_pow(&-a_j.clone(), (n + 1 - l) as i64)
                * &bern[n + 1 - l];
            if !c.is_zero() {
                rhs = rhs - s_l.scale(&(c * &inv_np1));
            }
        }
    }
    let up_k = mixed_poly(n + 1, &key.extended(0));
    let up_km1 = mixed_poly(n + 1, &key.extended(-1));
    rhs - (up_k - up_km1).scale(&inv_np1)
}

/// Compares `S_{n+1}` generated directly with [`recurrence_rhs`].
pub fn verify_recurrence(n: usize, key: &MixedFamilyKey) -> IdentityReport {
    let lhs = mixed_poly(n + 1, key);
    IdentityReport::of_polys(
        IdentityId::T3,
        CheckParams::new(n, key),
        lhs,
        recurrence_rhs(n, key),
    )
}

/// Right side of the degree-lowering relation: produces `S_n` (n >= 1) from
/// `S_0..S_{n-1}`, Bernoulli numbers weighted by power sums of the
/// parameters, and the extended families.
pub fn more_relation_rhs(n: usize, key: &MixedFamilyKey) -> Polynomial {
    assert!(n >= 1, "the degree-lowering relation needs n >= 1");
    let s_seq = mixed_sequence(n - 1, key);
    let bern = bernoulli_numbers(n);
    let inv_n = Rational::from_integer((n as i64).into()).recip();

    let mut rhs = Polynomial::x_pow(1) * &s_seq[n - 1];
    for m in 1..=n {
        let power_sum: Rational = key
            .params
            .a()
            .iter()
            .map(|a_j| rational_pow(a_j, m as i64))
            .sum();
        let c = neg_one_pow(m - 1) * binom(n - 1, m - 1) * &bern[m]
            / Rational::from_integer((m as i64).into())
            * power_sum;
        if !c.is_zero() {
            rhs = rhs + s_seq[n - m].scale(&c);
        }
    }
    let up_km1 = mixed_poly(n, &key.extended(-1));
    let up_k = mixed_poly(n, &key.extended(0));
    rhs + (up_km1 - up_k).scale(&inv_n)
}

/// The re-indexed display of the degree-lowering relation, producing
/// `S_{n+1}`; term by term it must agree with [`recurrence_rhs`].
pub fn reindexed_lowering_rhs(n: usize, key: &MixedFamilyKey) -> Polynomial {
    let s_seq = mixed_sequence(n, key);
    let bern = bernoulli_numbers(n + 1);
    let inv_np1 = Rational::from_integer((n as i64 + 1).into()).recip();

    let mut rhs = Polynomial::x_pow(1) * &s_seq[n];
    for l in 1..=n + 1 {
        let power_sum: Rational = key
            .params
            .a()
            .iter()
            .map(|a_j| rational_pow(a_j, l as i64))
            .sum();
        let c = neg_one_pow(l - 1) * binom(n, l - 1) * &bern[l]
            / Rational::from_integer((l as i64).into())
            * power_sum;
        if !c.is_zero() {
            rhs = rhs + s_seq[n + 1 - l].scale(&c);
        }
    }
    let up_km1 = mixed_poly(n + 1, &key.extended(-1));
    let up_k = mixed_poly(n + 1, &key.extended(0));
    rhs + (up_km1 - up_k).scale(&inv_np1)
}

/// Checks the degree-lowering relation at `n` and, as a second report, that
/// its re-indexed form coincides with the degree-raising recurrence
/// (both produce `S_n` here).
pub fn verify_more_relation(
    n: usize,
    key: &MixedFamilyKey,
) -> Result<(IdentityReport, IdentityReport)> {
    if n == 0 {
        return Err(Error::Domain(
            "the degree-lowering relation divides by n; need n >= 1".into(),
        ));
    }
    let params = CheckParams::new(n, key);
    let direct = IdentityReport::of_polys(
        IdentityId::T4,
        params.clone(),
        mixed_poly(n, key),
        more_relation_rhs(n, key),
    );
    let remark = IdentityReport::of_polys(
        IdentityId::T4Remark,
        params,
        recurrence_rhs(n - 1, key),
        reindexed_lowering_rhs(n - 1, key),
    );
    Ok((direct, remark))
}

/// Scalar relation between the family's numbers: an alternating binomial
/// sum of mixed numbers against a double sum of poly-Bernoulli numbers of
/// order `k-1` and Barnes numbers. All ingredients are generated with two
/// degrees of cap headroom, matching the pairing against `x^(n+1)`.
pub fn verify_number_relation(n: usize, key: &MixedFamilyKey) -> IdentityReport {
    let s_nums = mixed_numbers(n, key);
    let mut lhs = Rational::zero();
    for (m, s_m) in s_nums.iter().enumerate() {
        lhs += binom(n + 1, m) * neg_one_pow(n - m) * s_m;
    }

    let barnes_nums: Vec<Rational> = barnes_sequence(n, &key.params)
        .iter()
        .map(Polynomial::constant_term)
        .collect();
    let pb_nums: Vec<Rational> = poly_bernoulli_sequence(n, key.k - 1)
        .iter()
        .map(Polynomial::constant_term)
        .collect();
    let mut rhs = Rational::zero();
    for l in 0..=n {
        for m in 0..=l {
            rhs += neg_one_pow(l - m)
                * binom(l, m)
                * binom(n + 1, l + 1)
                * &pb_nums[m]
                * &barnes_nums[n - l];
        }
    }
    IdentityReport::of_scalars(IdentityId::T5, CheckParams::new(n, key), lhs, rhs)
}

/// Coefficients of `S_n` over the falling factorials:
/// `sum_{l=m}^n S2(l,m) C(n,l) S_{n-l}(a)` for `m = 0..=n`.
pub fn falling_expansion_coeffs(n: usize, key: &MixedFamilyKey) -> Vec<Rational> {
    let s_nums = mixed_numbers(n, key);
    (0..=n)
        .map(|m| {
            (m..=n)
                .map(|l| stirling2(l, m) * binom(n, l) * &s_nums[n - l])
                .sum()
        })
        .collect()
}

/// Coefficients of `S_n` over the rising factorials: same Stirling weights,
/// but with the lower members evaluated at `-m`.
pub fn rising_expansion_coeffs(n: usize, key: &MixedFamilyKey) -> Vec<Rational> {
    let s_seq = mixed_sequence(n, key);
    (0..=n)
        .map(|m| {
            let at = -Rational::from_integer((m as i64).into());
            (m..=n)
                .map(|l| stirling2(l, m) * binom(n, l) * s_seq[n - l].eval(&at))
                .sum()
        })
        .collect()
}

/// Expansion of `S_n` over the falling-factorial basis, with the basis
/// polynomials built by direct product.
pub fn verify_falling(n: usize, key: &MixedFamilyKey) -> IdentityReport {
    let coeffs = falling_expansion_coeffs(n, key);
    let mut rhs = Polynomial::zero();
    for (m, c) in coeffs.iter().enumerate() {
        rhs = rhs + falling_factorial(m).scale(c);
    }
    IdentityReport::of_polys(
        IdentityId::T6,
        CheckParams::new(n, key),
        mixed_poly(n, key),
        rhs,
    )
}

/// Expansion of `S_n` over the rising-factorial basis.
pub fn verify_rising(n: usize, key: &MixedFamilyKey) -> IdentityReport {
    let coeffs = rising_expansion_coeffs(n, key);
    let mut rhs = Polynomial::zero();
    for (m, c) in coeffs.iter().enumerate() {
        rhs = rhs + rising_factorial(m).scale(c);
    }
    IdentityReport::of_polys(
        IdentityId::T7,
        CheckParams::new(n, key),
        mixed_poly(n, key),
        rhs,
    )
}

/// Coefficients of `S_n` over the order-`s` Frobenius-Euler basis: the
/// weights sample the lower members at the integers `0..=s`.
pub fn frobenius_expansion_coeffs(
    n: usize,
    key: &MixedFamilyKey,
    s: usize,
    lambda: &Rational,
) -> Result<Vec<Rational>> {
    if lambda.is_one() {
        return Err(Error::InvalidParams(
            "Frobenius-Euler parameter lambda must differ from 1".into(),
        ));
    }
    let s_seq = mixed_sequence(n, key);
    let scale = rational_pow(&(Rational::one() - lambda), -(s as i64));
    Ok((0..=n)
        .map(|m| {
            let mut inner = Rational::zero();
            for j in 0..=s {
                inner += binom(s, j)
                    * rational_pow(&-lambda.clone(), (s - j) as i64)
                    * s_seq[n - m].eval(&Rational::from_integer((j as i64).into()));
            }
            binom(n, m) * &scale * inner
        })
        .collect())
}

/// Expansion of `S_n` over Frobenius-Euler polynomials of order `s`.
pub fn verify_frobenius(
    n: usize,
    key: &MixedFamilyKey,
    s: usize,
    lambda: &Rational,
) -> Result<IdentityReport> {
    let basis = frobenius_euler_sequence(n, s, lambda)?;
    let coeffs = frobenius_expansion_coeffs(n, key, s, lambda)?;
    let mut rhs = Polynomial::zero();
    for (h_m, c) in basis.iter().zip(&coeffs) {
        rhs = rhs + h_m.scale(c);
    }
    Ok(IdentityReport::of_polys(
        IdentityId::T8,
        CheckParams::new(n, key).with_s(s).with_lambda(lambda),
        mixed_poly(n, key),
        rhs,
    ))
}

/// Coefficients of `S_n` over the order-`s` higher Bernoulli basis:
/// Stirling-weighted combinations of the family's numbers.
pub fn higher_bernoulli_expansion_coeffs(
    n: usize,
    key: &MixedFamilyKey,
    s: usize,
) -> Vec<Rational> {
    let s_nums = mixed_numbers(n, key);
    (0..=n)
        .map(|m| {
            let mut inner = Rational::zero();
            for l in 0..=n - m {
                let ratio = Rational::new(binomial(n - m, l), binomial(l + s, l));
                inner += ratio * stirling2(l + s, s) * &s_nums[n - m - l];
            }
            binom(n, m) * inner
        })
        .collect()
}

/// Expansion of `S_n` over higher-order Bernoulli polynomials of order `s`.
pub fn verify_higher_bernoulli(n: usize, key: &MixedFamilyKey, s: usize) -> IdentityReport {
    let basis = higher_bernoulli_sequence(n, s);
    let coeffs = higher_bernoulli_expansion_coeffs(n, key, s);
    let mut rhs = Polynomial::zero();
    for (b_m, c) in basis.iter().zip(&coeffs) {
        rhs = rhs + b_m.scale(c);
    }
    IdentityReport::of_polys(
        IdentityId::T9,
        CheckParams::new(n, key).with_s(s),
        mixed_poly(n, key),
        rhs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::BarnesParams;
    use crate::rational::{rat, ratio};
    use crate::series::Series;
    use crate::umbral::functional_apply;

    fn key(a: &[(i64, i64)], k: i64) -> MixedFamilyKey {
        MixedFamilyKey::new(
            BarnesParams::new(a.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap(),
            k,
        )
    }

    fn assert_all_equal(reports: &[IdentityReport]) {
        for r in reports {
            assert!(
                r.equal,
                "{} failed at n={} r={} k={} a={:?}: {:?}",
                r.id, r.params.n, r.params.r, r.params.k, r.params.a, r.first_diff
            );
        }
    }

    #[test]
    fn explicit_forms_trivial_degree() {
        let key = key(&[(1, 1), (2, 1)], 1);
        let reports = verify_explicit(0, &key);
        assert_eq!(reports.len(), 5);
        assert_all_equal(&reports);
        for r in &reports {
            assert_eq!(r.lhs, Side::Poly(Polynomial::constant(ratio(1, 2))));
        }
    }

    #[test]
    fn explicit_forms_small_grid() {
        let key = key(&[(1, 1), (2, 1)], -1);
        for n in 0..=6 {
            assert_all_equal(&verify_explicit(n, &key));
        }
    }

    #[test]
    fn explicit_forms_detect_perturbation() {
        // a corrupted ingredient must flip `equal` and populate the diff
        let key = key(&[(1, 1)], 1);
        let n = 3;
        let clean = verify_explicit(n, &key);
        let lhs = match &clean[4].lhs {
            Side::Poly(p) => p.clone(),
            _ => unreachable!(),
        };
        let mut nums = mixed_numbers(n, &key);
        nums[2] += rat(1);
        let mut rhs = Polynomial::zero();
        for j in 0..=n {
            rhs = rhs + Polynomial::monomial(j, binom(n, j) * &nums[n - j]);
        }
        let report = IdentityReport::of_polys(IdentityId::T1e, CheckParams::new(n, &key), lhs, rhs);
        assert!(!report.equal);
        let diff = report.first_diff.expect("diff populated");
        assert_eq!(diff.index, 1);
        assert_eq!(&diff.rhs - &diff.lhs, rat(3)); // C(3,1) * 1
    }

    #[test]
    fn sheffer_shift_small_grid() {
        let key = key(&[(1, 2), (3, 1)], 2);
        let x0 = ratio(1, 3);
        for y0 in [rat(1), rat(-1), ratio(1, 2), rat(0)] {
            for n in 0..=6 {
                let r = verify_sheffer(n, &key, &x0, &y0);
                assert!(r.equal, "n={n} y0={y0}: {:?}", r.first_diff);
            }
        }
    }

    #[test]
    fn sheffer_shift_zero_is_identity() {
        let key = key(&[(1, 1)], 1);
        let r = verify_sheffer(4, &key, &rat(0), &rat(0));
        assert_eq!(r.lhs, Side::Poly(mixed_poly(4, &key)));
        assert!(r.equal);
    }

    #[test]
    fn recurrence_lowest_degree_and_small_grid() {
        let k1 = key(&[(1, 1)], 1);
        assert!(verify_recurrence(0, &k1).equal);
        let k2 = key(&[(2, 1), (1, 2)], -1);
        for n in 0..=5 {
            let r = verify_recurrence(n, &k2);
            assert!(r.equal, "n={n}: {:?}", r.first_diff);
        }
    }

    #[test]
    fn recurrence_bracket_sign_matters() {
        // flipping the extended-family bracket must break the identity
        // whenever the two polylogarithm orders differ
        let key = key(&[(1, 1)], 1);
        let n = 2;
        let lhs = mixed_poly(n + 1, &key);
        let rhs = recurrence_rhs(n, &key);
        assert_eq!(lhs, rhs);
        let up_k = mixed_poly(n + 1, &key.extended(0));
        let up_km1 = mixed_poly(n + 1, &key.extended(-1));
        let flip = (up_k - up_km1).scale(&ratio(2, n as i64 + 1));
        let flipped = rhs + flip;
        assert_ne!(lhs, flipped);
    }

    #[test]
    fn lowering_relation_small_grid() {
        let key = key(&[(1, 1), (2, 1)], 0);
        for n in 1..=5 {
            let (direct, remark) = verify_more_relation(n, &key).unwrap();
            assert!(direct.equal, "n={n}: {:?}", direct.first_diff);
            assert!(remark.equal, "n={n}: {:?}", remark.first_diff);
        }
        assert!(matches!(
            verify_more_relation(0, &key),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lowering_relation_rejects_wrong_shift() {
        // comparing the re-indexed display at a mismatched index must fail
        let key = key(&[(1, 1)], 1);
        let n = 4;
        assert_eq!(
            recurrence_rhs(n - 1, &key),
            reindexed_lowering_rhs(n - 1, &key)
        );
        assert_ne!(
            recurrence_rhs(n - 1, &key),
            reindexed_lowering_rhs(n - 2, &key)
        );
    }

    #[test]
    fn number_relation_small_grid() {
        let k = key(&[(1, 1), (2, 1)], -1);
        for n in 0..=6 {
            let r = verify_number_relation(n, &k);
            assert!(r.equal, "n={n}: {:?}", r.first_diff);
        }
    }

    #[test]
    fn number_relation_degenerate_point() {
        // n = 0 reduces to S_0(a) = B_0^(k-1) B_0(a) = 1/(a_1 a_2)
        let k = key(&[(2, 1), (3, 1)], 2);
        let r = verify_number_relation(0, &k);
        assert!(r.equal);
        assert_eq!(r.lhs, Side::Scalar(ratio(1, 6)));
    }

    #[test]
    fn number_relation_matches_direct_pairing() {
        // both sides equal <t^r/prod(e^{a_j t}-1) Li_k(1-e^{-t}) | x^{n+1}>
        use crate::families::{barnes_kernel, polylog_series};
        let k = key(&[(1, 1), (1, 2)], -2);
        for n in 0..=5usize {
            let cap = n + 2;
            let series = Series::one(cap)
                .divide(&barnes_kernel(&k.params, cap))
                .unwrap()
                * polylog_series(k.k, cap);
            let paired = functional_apply(&series, &Polynomial::x_pow(n + 1)).unwrap();
            let r = verify_number_relation(n, &k);
            assert_eq!(r.lhs, Side::Scalar(paired.clone()), "n={n}");
            assert_eq!(r.rhs, Side::Scalar(paired), "n={n}");
        }
    }

    #[test]
    fn number_relation_pairing_needs_cap_guard() {
        // with cap = n instead of n + 2 the pairing must refuse, not lie
        use crate::families::{barnes_kernel, polylog_series};
        let k = key(&[(1, 1)], 1);
        let n = 4usize;
        let series =
            Series::one(n).divide(&barnes_kernel(&k.params, n)).unwrap() * polylog_series(k.k, n);
        let got = functional_apply(&series, &Polynomial::x_pow(n + 1));
        assert_eq!(
            got,
            Err(Error::CapExhausted {
                cap: n,
                needed: n + 1
            })
        );
    }

    #[test]
    fn factorial_expansions_small_grid() {
        let k = key(&[(1, 1), (1, 2)], 1);
        for n in 0..=6 {
            let f = verify_falling(n, &k);
            assert!(f.equal, "falling n={n}: {:?}", f.first_diff);
            let r = verify_rising(n, &k);
            assert!(r.equal, "rising n={n}: {:?}", r.first_diff);
        }
    }

    #[test]
    fn basis_expansions_small_grid() {
        let k = key(&[(2, 1)], -1);
        for s in 0..=2usize {
            for n in 0..=4 {
                let r8 = verify_frobenius(n, &k, s, &ratio(1, 3)).unwrap();
                assert!(r8.equal, "frobenius n={n} s={s}: {:?}", r8.first_diff);
                let r9 = verify_higher_bernoulli(n, &k, s);
                assert!(r9.equal, "higher n={n} s={s}: {:?}", r9.first_diff);
            }
        }
        assert!(verify_frobenius(2, &k, 1, &rat(1)).is_err());
    }

    #[test]
    fn order_zero_basis_collapses_to_monomial_expansion() {
        // s = 0 reduces both expansions to the monomial form of T1e
        let k = key(&[(1, 1), (2, 1)], 1);
        let n = 5;
        let t1e = &verify_explicit(n, &k)[4];
        let r8 = verify_frobenius(n, &k, 0, &rat(2)).unwrap();
        let r9 = verify_higher_bernoulli(n, &k, 0);
        assert_eq!(r8.rhs, t1e.rhs);
        assert_eq!(r9.rhs, t1e.rhs);
    }

    #[test]
    fn report_ordering_is_deterministic() {
        let k1 = key(&[(1, 1)], 0);
        let k2 = key(&[(1, 1)], 1);
        let mut reports = vec![
            verify_number_relation(2, &k2),
            verify_number_relation(1, &k1),
            verify_recurrence(0, &k1),
        ];
        sort_reports(&mut reports);
        let ids: Vec<_> = reports
            .iter()
            .map(|r| (r.id, r.params.n, r.params.k))
            .collect();
        assert_eq!(
            ids,
            vec![
                (IdentityId::T3, 0, 0),
                (IdentityId::T5, 1, 0),
                (IdentityId::T5, 2, 1)
            ]
        );
    }
}
