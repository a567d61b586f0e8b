//! Misprinted closed forms, kept so their failures stay reproducible.
//!
//! Each entry pairs the printed formula with its corrected counterpart and a
//! brute-force oracle at one parameter point.

use serde::Serialize;

use crate::bernoulli::{
    paired_coefficients, periodic_bernoulli, weighted_bernoulli_sum_closed, weighted_bernoulli_sum_direct,
    weighted_sum_from,
};
use crate::dedekind::{reciprocity_lhs, reciprocity_rhs, reciprocity_rhs_form, ReciprocityVariant, RhsForm};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::spectra::{at_zero, spectral_power_sum, spectral_power_sum_at_zero, SpectralQuery};
use crate::Method;

/// Weighted Bernoulli sum without the alternating sign.
pub fn weighted_bernoulli_sum_printed(m: u64, n: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::OutOfDomain { what: "m must be positive" });
    }
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    Ok(weighted_sum_from(&paired_coefficients(n, false), m, n))
}

/// Weighted Bernoulli sum with the sign `(-1)^i` on the first index, which
/// agrees with the defining sum for odd `n` only.
pub fn weighted_bernoulli_sum_first_index_sign(m: u64, n: u32) -> Result<Rational> {
    let mut coeffs = paired_coefficients(n, false);
    for c in coeffs.iter_mut().skip(1).step_by(2) {
        *c = -c.clone();
    }
    weighted_bernoulli_sum_closed(m, n)?;
    Ok(weighted_sum_from(&coeffs, m, n))
}

/// Distribution relation right-hand side with the sum starting at `k = 1`.
pub fn distribution_rhs_printed(n: u32, a: u64, x: &Rational) -> Result<Rational> {
    if a == 0 {
        return Err(Error::OutOfDomain { what: "a must be positive" });
    }
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let ar = Rational::from(a);
    let sum: Rational = (1..a)
        .map(|k| periodic_bernoulli(n, &(x + Rational::frac(k as i64, a as i64))))
        .sum();
    Ok(ar.pow(n - 1) * sum)
}

/// Gap-route right-hand sides with unsigned paired Bernoulli sums and, on
/// the route through `Ap_a` and `Ap_b`, unreduced gap power sums.
pub fn reciprocity_rhs_printed(a: u64, b: u64, n: u32, variant: ReciprocityVariant) -> Result<Rational> {
    reciprocity_rhs_form(a, b, n, variant, RhsForm { signed: false, reduced: false })
}

/// The `Ap_a`/`Ap_b` route with the sign fixed but gap power sums taken over
/// the raw gaps. Wrong as soon as some gap exceeds `min(a, b)`.
pub fn prop4_unreduced(a: u64, b: u64, n: u32) -> Result<Rational> {
    reciprocity_rhs_form(a, b, n, ReciprocityVariant::Prop4, RhsForm { signed: true, reduced: false })
}

/// The `x = 0` spectral formula with the gap sum running to `i = n`.
pub fn spectral_power_sum_at_zero_printed(a: u64, b: u64, n: u32) -> Result<Rational> {
    at_zero(a, b, n, n + 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErratumReport {
    pub id: &'static str,
    pub params: String,
    pub printed: Rational,
    pub corrected: Rational,
    pub oracle: Rational,
    pub printed_matches_oracle: bool,
    pub corrected_matches_oracle: bool,
}

impl ErratumReport {
    fn new(id: &'static str, params: String, printed: Rational, corrected: Rational, oracle: Rational) -> Self {
        ErratumReport {
            printed_matches_oracle: printed == oracle,
            corrected_matches_oracle: corrected == oracle,
            id,
            params,
            printed,
            corrected,
            oracle,
        }
    }

    /// The printed form misses the oracle and the corrected one hits it.
    pub fn confirmed(&self) -> bool {
        !self.printed_matches_oracle && self.corrected_matches_oracle
    }
}

/// Every documented erratum at its witness parameters.
pub fn errata_catalog() -> Result<Vec<ErratumReport>> {
    let mut out = Vec::new();

    out.push(ErratumReport::new(
        "eq11",
        "m=3,n=1".into(),
        weighted_bernoulli_sum_printed(3, 1)?,
        weighted_bernoulli_sum_closed(3, 1)?,
        weighted_bernoulli_sum_direct(3, 1),
    ));
    out.push(ErratumReport::new(
        "eq11_even_n",
        "m=2,n=2".into(),
        weighted_bernoulli_sum_first_index_sign(2, 2)?,
        weighted_bernoulli_sum_closed(2, 2)?,
        weighted_bernoulli_sum_direct(2, 2),
    ));

    let x = Rational::zero();
    let lhs = periodic_bernoulli(2, &(Rational::from(2) * &x));
    let full: Rational = (0..2u64)
        .map(|k| periodic_bernoulli(2, &(&x + Rational::frac(k as i64, 2))))
        .sum();
    out.push(ErratumReport::new(
        "eq3_distribution",
        "n=2,a=2,x=0".into(),
        distribution_rhs_printed(2, 2, &x)?,
        Rational::from(2) * full,
        lhs,
    ));

    for (id, variant) in [("prop3", ReciprocityVariant::Prop3), ("prop4", ReciprocityVariant::Prop4)] {
        out.push(ErratumReport::new(
            id,
            "a=2,b=3,n=1".into(),
            reciprocity_rhs_printed(2, 3, 1, variant)?,
            reciprocity_rhs(2, 3, 1, variant)?,
            reciprocity_lhs(2, 3, 1)?,
        ));
    }
    out.push(ErratumReport::new(
        "prop4_unreduced",
        "a=3,b=4,n=1".into(),
        prop4_unreduced(3, 4, 1)?,
        reciprocity_rhs(3, 4, 1, ReciprocityVariant::Prop4)?,
        reciprocity_lhs(3, 4, 1)?,
    ));

    let zero = SpectralQuery::new(2, 3, 1, Rational::zero())?;
    out.push(ErratumReport::new(
        "prop5_zero",
        "a=2,b=3,n=1".into(),
        spectral_power_sum_at_zero_printed(2, 3, 1)?,
        spectral_power_sum_at_zero(2, 3, 1)?,
        spectral_power_sum(&zero, Method::Brute)?,
    ));
    Ok(out)
}
