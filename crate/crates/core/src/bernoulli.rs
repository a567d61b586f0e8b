//! Bernoulli numbers, polynomials and periodic Bernoulli functions, plus the
//! closed forms for power sums built from them.
//!
//! Convention: `B_1 = -1/2`, so that `B_1(x) = x - 1/2` agrees with the
//! periodic function `x - floor(x) - 1/2` on `[0, 1)`.

use std::sync::{OnceLock, RwLock};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::Sides;

/// Append-only table of Bernoulli numbers, filled by the defining recurrence
/// `sum_{k=0}^{n} C(n+1,k) B_k = 0`.
///
/// Safe to share between threads; concurrent fills compute identical values,
/// so readers cannot observe the difference between a cached and a fresh value.
#[derive(Debug)]
pub struct BernoulliCache {
    values: RwLock<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            values: RwLock::new(vec![Rational::one()]),
        }
    }

    pub fn get(&self, n: u32) -> Rational {
        let idx = n as usize;
        {
            let values = self.values.read().unwrap_or_else(|e| e.into_inner());
            if let Some(v) = values.get(idx) {
                return v.clone();
            }
        }
        let mut values = self.values.write().unwrap_or_else(|e| e.into_inner());
        while values.len() <= idx {
            let m = values.len() as u32;
            let next = if m >= 3 && m % 2 == 1 {
                Rational::zero()
            } else {
                let acc: Rational = (0..m)
                    .map(|k| Rational::from(binomial(m + 1, k)) * &values[k as usize])
                    .sum();
                -acc / Rational::from(m + 1)
            };
            values.push(next);
        }
        values[idx].clone()
    }

    /// Number of cached entries.
    pub fn len(&self) -> usize {
        self.values.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn global_cache() -> &'static BernoulliCache {
    static CACHE: OnceLock<BernoulliCache> = OnceLock::new();
    CACHE.get_or_init(BernoulliCache::new)
}

/// `B_n`, memoized process-wide.
pub fn bernoulli_number(n: u32) -> Rational {
    global_cache().get(n)
}

/// `B_n(x) = sum_{i=0}^{n} C(n,i) B_i x^{n-i}`.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Rational {
    // Horner in x over the coefficients C(n,i) B_i, highest power first.
    let mut acc = Rational::zero();
    for i in 0..=n {
        acc = acc * x + Rational::from(binomial(n, i)) * bernoulli_number(i);
    }
    acc
}

/// `B̄_n(x) = B_n(x - floor(x))`; one-periodic.
pub fn periodic_bernoulli(n: u32, x: &Rational) -> Rational {
    bernoulli_poly(n, &x.fract())
}

/// `sum_{k=0}^{m-1} (x+k)^n` via `(B_{n+1}(x+m) - B_{n+1}(x)) / (n+1)`.
pub fn power_sum_closed(x: &Rational, m: u64, n: u32) -> Rational {
    let upper = bernoulli_poly(n + 1, &(x + Rational::from(m)));
    (upper - bernoulli_poly(n + 1, x)) / Rational::from(n + 1)
}

/// The coefficients `(-1)^{n+1-i} n! B_i B_{n+1-i} / (i! (n+1-i)!)` for `i = 0..=n+1`.
///
/// Both the reciprocity polynomial and the weighted Bernoulli sum are built
/// from these. For odd `n` the sign equals `(-1)^i`; for even `n` only the
/// `(-1)^{n+1-i}` placement matches the defining sum.
pub(crate) fn paired_coefficients(n: u32, signed: bool) -> Vec<Rational> {
    let nf = Rational::from(factorial(n));
    (0..=n + 1)
        .map(|i| {
            let denom = Rational::from(factorial(i) * factorial(n + 1 - i));
            let c = &nf * bernoulli_number(i) * bernoulli_number(n + 1 - i) / denom;
            if signed && (n + 1 - i) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// `n B_{n+1} / (n+1)`.
pub(crate) fn paired_constant(n: u32) -> Rational {
    Rational::from(n) * bernoulli_number(n + 1) / Rational::from(n + 1)
}

/// `m^n sum_{k=1}^{m-1} (k/m) B_n(k/m)` in closed form:
/// `sum_{i=0}^{n+1} (-1)^{n+1-i} n! m^{n-i+1} B_i B_{n-i+1} / (i!(n-i+1)!) + n B_{n+1}/(n+1)`.
pub fn weighted_bernoulli_sum_closed(m: u64, n: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::OutOfDomain { what: "m must be positive" });
    }
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    Ok(weighted_sum_from(&paired_coefficients(n, true), m, n))
}

/// `m^n sum_{k=1}^{m-1} (k/m) B_n(k/m)` summed term by term.
pub fn weighted_bernoulli_sum_direct(m: u64, n: u32) -> Rational {
    let mr = Rational::from(m);
    let s: Rational = (1..m)
        .map(|k| {
            let t = Rational::frac(k as i64, m as i64);
            &t * bernoulli_poly(n, &t)
        })
        .sum();
    mr.pow(n) * s
}

pub(crate) fn weighted_sum_from(coeffs: &[Rational], m: u64, n: u32) -> Rational {
    let m = Rational::from(m);
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * m.pow(n + 1 - i as u32))
        .chain(std::iter::once(paired_constant(n)))
        .sum()
}

/// Both sides of the distribution relation
/// `B̄_n(ax) = a^{n-1} sum_{k=0}^{a-1} B̄_n(x + k/a)`.
pub fn distribution_residual(n: u32, a: u64, x: &Rational) -> Result<Sides> {
    if a == 0 {
        return Err(Error::OutOfDomain { what: "a must be positive" });
    }
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let ar = Rational::from(a);
    let lhs = periodic_bernoulli(n, &(&ar * x));
    let sum: Rational = (0..a)
        .map(|k| periodic_bernoulli(n, &(x + Rational::frac(k as i64, a as i64))))
        .sum();
    let rhs = ar.pow(n - 1) * sum;
    Ok(Sides { lhs, rhs })
}
