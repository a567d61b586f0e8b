//! Test functions plugged into the summation identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bernoulli::periodic_bernoulli;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A serializable, exactly evaluable function of one rational variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FunctionSpec {
    /// `f(t) = sum coeffs[i] t^i`.
    #[serde(rename = "poly")]
    Poly { coeffs: Vec<Rational> },
    /// `f(t) = q^t`, integer `t` only.
    #[serde(rename = "qpow")]
    QPow { q: Rational },
    /// `f(t) = B̄_n(scale * t)`.
    #[serde(rename = "pbern")]
    PeriodicBernoulli { n: u32, scale: Rational },
}

impl FunctionSpec {
    pub fn poly<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        FunctionSpec::Poly {
            coeffs: coeffs.into_iter().collect(),
        }
    }

    pub fn qpow(q: Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::ZeroBase);
        }
        Ok(FunctionSpec::QPow { q })
    }

    pub fn periodic_bernoulli(n: u32, scale: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        Ok(FunctionSpec::PeriodicBernoulli { n, scale })
    }

    /// Whether the function accepts non-integer arguments.
    pub fn accepts_rationals(&self) -> bool {
        !matches!(self, FunctionSpec::QPow { .. })
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        match self {
            FunctionSpec::Poly { coeffs } => Ok(coeffs
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, c| acc * t + c)),
            FunctionSpec::QPow { q } => {
                if q.is_zero() {
                    return Err(Error::ZeroBase);
                }
                let k = t.to_integer().ok_or_else(|| Error::NonIntegerExponent(t.clone()))?;
                let k = i64::try_from(k).map_err(|_| Error::OutOfDomain {
                    what: "exponent of q^t out of range",
                })?;
                q.powi(k)
            }
            FunctionSpec::PeriodicBernoulli { n, scale } => Ok(periodic_bernoulli(*n, &(scale * t))),
        }
    }

    pub fn eval_int(&self, t: i64) -> Result<Rational> {
        self.eval(&Rational::from(t))
    }

    /// Short human-readable label, stable across runs.
    pub fn label(&self) -> String {
        match self {
            FunctionSpec::Poly { coeffs } => {
                let cs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                format!("poly[{}]", cs.join(","))
            }
            FunctionSpec::QPow { q } => format!("qpow[{q}]"),
            FunctionSpec::PeriodicBernoulli { n, scale } => format!("pbern[{n},{scale}]"),
        }
    }
}

/// The function corpus used by the identity sweeps: one polynomial of each
/// degree `0..=6` with small random rational coefficients, `q^t` for
/// `q ∈ {2, 3, 1/2, -1}`, and `B̄_n(t/7)` for `n = 1..=5`.
pub fn standard_corpus(seed: u64) -> Vec<FunctionSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for degree in 0..=6usize {
        let mut coeffs: Vec<Rational> = (0..=degree)
            .map(|_| Rational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=6)))
            .collect();
        if coeffs[degree].is_zero() {
            coeffs[degree] = Rational::one();
        }
        out.push(FunctionSpec::Poly { coeffs });
    }
    for q in [Rational::from(2), Rational::from(3), Rational::frac(1, 2), Rational::from(-1)] {
        out.push(FunctionSpec::QPow { q });
    }
    for n in 1..=5 {
        out.push(FunctionSpec::PeriodicBernoulli {
            n,
            scale: Rational::frac(1, 7),
        });
    }
    out
}

/// Replication constants `alpha_a, beta_a, alpha_b, beta_b` of a function
/// satisfying `f(ax) = alpha_a sum_{k} f(x + k/a) + beta_a` at the points a
/// reciprocity check needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplicationData {
    pub alpha_a: Rational,
    pub beta_a: Rational,
    pub alpha_b: Rational,
    pub beta_b: Rational,
}

impl ReplicationData {
    pub fn new(alpha_a: Rational, beta_a: Rational, alpha_b: Rational, beta_b: Rational) -> Self {
        ReplicationData {
            alpha_a,
            beta_a,
            alpha_b,
            beta_b,
        }
    }

    /// Constants of `B̄_n`: `alpha = a^{n-1}`, `beta = 0`.
    pub fn bernoulli(n: u32, a: u64, b: u64) -> Self {
        let e = n.saturating_sub(1);
        ReplicationData {
            alpha_a: Rational::from(a).pow(e),
            beta_a: Rational::zero(),
            alpha_b: Rational::from(b).pow(e),
            beta_b: Rational::zero(),
        }
    }
}
