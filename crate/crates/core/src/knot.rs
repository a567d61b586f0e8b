//! Integral over the unit circle of the signature function of the `(a,b)`
//! torus knot, as a lattice sum and in closed form.

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::semigroup::NumericalSemigroup;
use crate::Method;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusKnotQuery {
    a: u64,
    b: u64,
}

impl TorusKnotQuery {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a < 2 || b < 2 {
            return Err(Error::TrivialKnot { a, b });
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(TorusKnotQuery { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignatureMethod {
    /// `sum_{i=1}^{b-1} sum_{j=1}^{a-1} (2|j/a + i/b - 1| - 1)`.
    Sum15,
    /// `-(1/3)(a - 1/a)(b - 1/b)`.
    Closed9,
}

pub fn signature_integral(q: &TorusKnotQuery, method: SignatureMethod) -> Rational {
    let (a, b) = (q.a as i64, q.b as i64);
    match method {
        SignatureMethod::Sum15 => (1..b)
            .flat_map(|i| (1..a).map(move |j| (i, j)))
            .map(|(i, j)| {
                let t = Rational::frac(j * b + i * a - a * b, a * b);
                Rational::from(2) * t.abs() - Rational::one()
            })
            .sum(),
        SignatureMethod::Closed9 => {
            let (ar, br) = (Rational::from(a), Rational::from(b));
            let fa = &ar - ar.recip().expect("a >= 2");
            let fb = &br - br.recip().expect("b >= 2");
            -(Rational::frac(1, 3) * fa * fb)
        }
    }
}

/// `sum (j/a + i/b)` over `0<i<b`, `0<j<a`, `ia + jb < ab`.
pub fn lattice_fraction_sum(q: &TorusKnotQuery, method: Method) -> Rational {
    let (a, b) = (q.a as i64, q.b as i64);
    match method {
        Method::Brute => {
            let s = NumericalSemigroup::new(q.a, q.b).expect("validated query");
            s.below_line_points()
                .map(|(i, j)| Rational::frac(j as i64 * b + i as i64 * a, a * b))
                .sum()
        }
        Method::Closed => {
            let m = Rational::from((a - 1) * (b - 1));
            &m / Rational::from(3) + m * Rational::frac(a + b + 1, 12 * a * b)
        }
    }
}

/// `[sum15, (a-1)(b-1) - 4 * fraction_sum, closed9]`; all three agree.
pub fn signature_integral_derivation_check(q: &TorusKnotQuery) -> Vec<Rational> {
    let middle =
        Rational::from((q.a - 1) * (q.b - 1)) - Rational::from(4) * lattice_fraction_sum(q, Method::Brute);
    vec![
        signature_integral(q, SignatureMethod::Sum15),
        middle,
        signature_integral(q, SignatureMethod::Closed9),
    ]
}

/// JSON shape of the `knot` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotReport {
    pub a: u64,
    pub b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sum15: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed9: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equal: Option<bool>,
}

impl KnotReport {
    pub fn compute(q: &TorusKnotQuery, methods: &[SignatureMethod]) -> Self {
        let pick = |m| methods.contains(&m).then(|| signature_integral(q, m));
        let sum15 = pick(SignatureMethod::Sum15);
        let closed9 = pick(SignatureMethod::Closed9);
        let equal = match (&sum15, &closed9) {
            (Some(x), Some(y)) => Some(x == y),
            _ => None,
        };
        KnotReport {
            a: q.a,
            b: q.b,
            sum15,
            closed9,
            equal,
        }
    }
}
