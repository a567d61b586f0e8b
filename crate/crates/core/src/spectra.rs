//! Power sums of the shifted Brieskorn spectrum
//! `sum_{i=1}^{b-1} sum_{j=1}^{a-1} (x/(ab) + j/a + i/b)^n`.

use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::bernoulli::{bernoulli_number, bernoulli_poly};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;
use crate::{Method, Sides};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralQuery {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub x: Rational,
}

impl SpectralQuery {
    pub fn new(a: u64, b: u64, n: u32, x: Rational) -> Result<Self> {
        NumericalSemigroup::new(a, b)?;
        Ok(SpectralQuery { a, b, n, x })
    }
}

pub fn spectral_power_sum(q: &SpectralQuery, method: Method) -> Result<Rational> {
    let s = NumericalSemigroup::new(q.a, q.b)?;
    Ok(match method {
        Method::Brute => spectral_brute(q),
        Method::Closed => spectral_closed(&s, q.n, &q.x),
    })
}

fn spectral_brute(q: &SpectralQuery) -> Rational {
    let (a, b) = (q.a as i64, q.b as i64);
    let shift = &q.x / Rational::from(a * b);
    (1..b)
        .flat_map(|i| (1..a).map(move |j| (i, j)))
        .map(|(i, j)| (&shift + Rational::frac(j * b + i * a, a * b)).pow(q.n))
        .sum()
}

/// `[B_{n+1}(x + m) - B_{n+1}(x)] / (n+1)`.
fn bernoulli_difference(n: u32, x: &Rational, m: u64) -> Rational {
    (bernoulli_poly(n + 1, &(x + Rational::from(m))) - bernoulli_poly(n + 1, x)) / Rational::from(n + 1)
}

fn spectral_closed(s: &NumericalSemigroup, n: u32, x: &Rational) -> Rational {
    let (a, b) = (s.a(), s.b());
    let (ar, br) = (Rational::from(a), Rational::from(b));
    let ab = Rational::from(a * b);
    let ab_n = ab.pow(n);
    let shifted = x + &ab;
    let gap_part: Rational = (0..=n)
        .map(|i| Rational::from(binomial(n, i)) * (shifted.pow(n - i) - x.pow(n - i)) * s.sylvester_sum(i))
        .sum();
    x.pow(n) / &ab_n - bernoulli_difference(n, &(x / &ar), b) / br.pow(n) - bernoulli_difference(n, &(x / &br), a) / ar.pow(n)
        + bernoulli_difference(n, x, a * b) / &ab_n
        + gap_part / ab_n
}

/// The `x = 0` specialization:
/// `sum_{i=0}^{n-1} C(n,i) S_{a,b}(i)/(ab)^i + [B_{n+1}(ab)/(ab)^n - B_{n+1}(a)/a^n - B_{n+1}(b)/b^n
///  - B_{n+1}(1/(ab)^n - 1/a^n - 1/b^n)] / (n+1)`.
pub fn spectral_power_sum_at_zero(a: u64, b: u64, n: u32) -> Result<Rational> {
    at_zero(a, b, n, n)
}

/// Shared by the printed variant, which lets the gap sum run to `i = n`.
pub(crate) fn at_zero(a: u64, b: u64, n: u32, gap_terms: u32) -> Result<Rational> {
    let s = NumericalSemigroup::new(a, b)?;
    if n == 0 {
        return Err(Error::OrderTooSmall { n, min: 1 });
    }
    let (ar, br) = (Rational::from(a), Rational::from(b));
    let ab = Rational::from(a * b);
    let gap_part: Rational = (0..gap_terms)
        .map(|i| Rational::from(binomial(n, i)) * s.sylvester_sum(i) / ab.pow(i))
        .sum();
    let bn1 = bernoulli_number(n + 1);
    let inv = ab.pow(n).recip()? - ar.pow(n).recip()? - br.pow(n).recip()?;
    let bracket = bernoulli_poly(n + 1, &ab) / ab.pow(n)
        - bernoulli_poly(n + 1, &ar) / ar.pow(n)
        - bernoulli_poly(n + 1, &br) / br.pow(n)
        - bn1 * inv;
    Ok(gap_part + bracket / Rational::from(n + 1))
}

/// `sum_{0<=i<b, 0<=j<a, ia+jb<ab} (x + ia + jb)^{n-2}`.
pub fn lattice_power_sum(a: u64, b: u64, n: u32, x: &Rational, method: Method) -> Result<Rational> {
    NumericalSemigroup::new(a, b)?;
    if n < 2 {
        return Err(Error::OrderTooSmall { n, min: 2 });
    }
    let ab = a * b;
    Ok(match method {
        Method::Brute => (0..b)
            .flat_map(|i| (0..a).map(move |j| i * a + j * b))
            .filter(|&v| v < ab)
            .map(|v| (x + Rational::from(v)).pow(n - 2))
            .sum(),
        Method::Closed => {
            let (ar, br) = (Rational::from(a), Rational::from(b));
            let x_over_b = x / &br;
            let inner: Rational = (0..=n)
                .map(|k| {
                    Rational::from(binomial(n, k))
                        * ar.pow(n - k)
                        * br.pow(k)
                        * (bernoulli_poly(n - k, &br) - bernoulli_number(n - k))
                        * bernoulli_poly(k, &x_over_b)
                })
                .sum();
            let first = bernoulli_poly(n - 1, &(x + Rational::from(ab))) / Rational::from(n - 1);
            first - inner / Rational::from(u64::from(n) * u64::from(n - 1) * ab)
        }
    })
}

/// `(ab)^n` times the brute spectral sum against the split over lattice
/// points below the line `ia + jb = ab` and their reflections.
pub fn spectral_split_residual(a: u64, b: u64, n: u32, x: &Rational) -> Result<Sides> {
    let s = NumericalSemigroup::new(a, b)?;
    let q = SpectralQuery::new(a, b, n, x.clone())?;
    let lhs = Rational::from(a * b).pow(n) * spectral_brute(&q);
    let ab2 = 2 * a * b;
    let rhs = s
        .below_line_points()
        .map(|(i, j)| {
            let v = i * a + j * b;
            (x + Rational::from(v)).pow(n) + (x + Rational::from(ab2 - v)).pow(n)
        })
        .sum();
    Ok(Sides { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn q(a: u64, b: u64, n: u32, x: &str) -> SpectralQuery {
        SpectralQuery::new(a, b, n, r(x)).unwrap()
    }

    fn pairs(max: u64) -> Vec<(u64, u64)> {
        (1..=max)
            .flat_map(|a| (a..=max).map(move |b| (a, b)))
            .filter(|&(a, b)| gcd(a, b) == 1)
            .collect()
    }

    #[test]
    fn power_sum_examples() {
        for m in [Method::Brute, Method::Closed] {
            assert_eq!(spectral_power_sum(&q(2, 3, 1, "0"), m).unwrap(), r("2"));
            assert_eq!(spectral_power_sum(&q(2, 3, 1, "6"), m).unwrap(), r("4"));
            assert_eq!(spectral_power_sum(&q(2, 3, 0, "-5/7"), m).unwrap(), r("2"));
        }
        assert!(SpectralQuery::new(4, 6, 1, r("0")).is_err());
    }

    #[test]
    fn at_zero_examples() {
        assert_eq!(spectral_power_sum_at_zero(2, 3, 1).unwrap(), r("2"));
        let brute = spectral_power_sum(&q(3, 5, 1, "0"), Method::Brute).unwrap();
        assert_eq!(spectral_power_sum_at_zero(3, 5, 1).unwrap(), brute);
        for b in 1..6 {
            assert_eq!(spectral_power_sum_at_zero(1, b, 3).unwrap(), r("0"));
        }
        assert!(spectral_power_sum_at_zero(2, 3, 0).is_err());
    }

    #[test]
    fn lattice_examples() {
        for m in [Method::Brute, Method::Closed] {
            assert_eq!(lattice_power_sum(2, 3, 3, &r("0"), m).unwrap(), r("14"));
            assert_eq!(lattice_power_sum(2, 3, 3, &r("1"), m).unwrap(), r("19"));
            assert_eq!(lattice_power_sum(2, 3, 2, &r("0"), m).unwrap(), r("5"));
        }
        assert_eq!(
            lattice_power_sum(2, 3, 1, &r("0"), Method::Brute),
            Err(Error::OrderTooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn split_examples() {
        let s = spectral_split_residual(3, 5, 1, &r("0")).unwrap();
        assert_eq!((s.lhs, s.rhs), (r("120"), r("120")));
        let s = spectral_split_residual(2, 3, 2, &r("0")).unwrap();
        assert_eq!((s.lhs, s.rhs), (r("74"), r("74")));
        for (a, b) in [(2, 3), (3, 7), (5, 4)] {
            let s = spectral_split_residual(a, b, 0, &r("3/8")).unwrap();
            let count = Rational::from((a - 1) * (b - 1));
            assert_eq!((s.lhs, s.rhs), (count.clone(), count));
        }
    }

    #[test]
    fn closed_forms_match_brute_force() {
        let xs = ["0", "1/2", "-2/3", "7", "6"].map(r);
        for (a, b) in pairs(12) {
            for n in 0..=6u32 {
                for x in &xs {
                    let qy = SpectralQuery::new(a, b, n, x.clone()).unwrap();
                    let brute = spectral_power_sum(&qy, Method::Brute).unwrap();
                    assert_eq!(spectral_power_sum(&qy, Method::Closed).unwrap(), brute, "({a},{b},{n},{x})");
                    let swapped = SpectralQuery::new(b, a, n, x.clone()).unwrap();
                    assert_eq!(spectral_power_sum(&swapped, Method::Brute).unwrap(), brute);
                    assert!(spectral_split_residual(a, b, n, x).unwrap().holds());
                }
                if n >= 1 {
                    let zero = SpectralQuery::new(a, b, n, Rational::zero()).unwrap();
                    assert_eq!(
                        spectral_power_sum_at_zero(a, b, n).unwrap(),
                        spectral_power_sum(&zero, Method::Brute).unwrap()
                    );
                }
            }
            for n in 2..=8u32 {
                for x in &xs {
                    assert_eq!(
                        lattice_power_sum(a, b, n, x, Method::Closed).unwrap(),
                        lattice_power_sum(a, b, n, x, Method::Brute).unwrap(),
                        "({a},{b},{n},{x})"
                    );
                }
            }
        }
    }
}
