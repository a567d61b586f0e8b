//! Apostol–Dedekind sums `s_n(a,b) = sum_{k=1}^{b-1} (k/b) B̄_n(ka/b)`.
//!
//! Three right-hand sides of the reciprocity law
//! `a b^n s_n(a,b) + b a^n s_n(b,a) = RHS(a,b,n)` (odd `n`) are provided:
//! the Bernoulli polynomial in `a, b`, the route through the Apéry set of
//! `ab` (gap power sums), and the route through the Apéry sets of `a` and `b`.
//! The reciprocity law drives [`apostol_sum_fast`], which descends along the
//! Euclidean algorithm instead of summing `b - 1` terms.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, gcd};
use crate::bernoulli::{bernoulli_number, paired_coefficients, paired_constant};
use crate::error::{Error, Result};
use crate::function::{FunctionSpec, ReplicationData};
use crate::rational::{Rational, RationalSum};
use crate::semigroup::{reduced_gap_power_sum, NumericalSemigroup};
use crate::Sides;

fn check_pair(a: u64, b: u64) -> Result<()> {
    if b == 0 {
        return Err(Error::ZeroGenerator { a, b });
    }
    if gcd(a, b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    Ok(())
}

fn check_odd(n: u32) -> Result<()> {
    if n.is_multiple_of(2) {
        Err(Error::EvenOrder(n))
    } else {
        Ok(())
    }
}

/// Precomputed `D b^n B_n(r/b)` for `r = 0..b`, where `D` clears the
/// denominators of `B_0..B_n`. Sums for every `a` coprime to `b` reuse it.
#[derive(Clone, Debug)]
pub struct ApostolTable {
    b: u64,
    n: u32,
    denom: BigInt,
    table: Vec<BigInt>,
    small: Option<Vec<i128>>,
}

impl ApostolTable {
    pub fn new(b: u64, n: u32) -> Result<Self> {
        if b == 0 {
            return Err(Error::ZeroGenerator { a: 0, b });
        }
        if n == 0 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        let bern: Vec<Rational> = (0..=n).map(bernoulli_number).collect();
        let d = bern.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        // D C(n,i) B_i b^i, an integer for every i
        let weights: Vec<BigInt> = bern
            .iter()
            .enumerate()
            .map(|(i, bi)| {
                let scaled = bi.numer() * (&d / bi.denom());
                scaled * binomial(n, i as u32) * BigInt::from(b).pow(i as u32)
            })
            .collect();
        let table: Vec<BigInt> = (0..b)
            .map(|r| {
                let r = BigInt::from(r);
                // Horner over r with weights for powers n, n-1, ..., 0
                weights.iter().fold(BigInt::zero(), |acc, w| acc * &r + w)
            })
            .collect();
        let bound = num_bigint::BigUint::from(b) * b * 2u8;
        let fits = table
            .iter()
            .all(|t| i128::try_from(t.magnitude() * &bound).is_ok());
        let small = fits.then(|| table.iter().map(|t| i128::try_from(t).unwrap()).collect());
        Ok(ApostolTable {
            b,
            n,
            denom: d,
            table,
            small,
        })
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `s_n(a, b)` for this table's `b` and `n`.
    pub fn sum(&self, a: u64) -> Result<Rational> {
        check_pair(a, self.b)?;
        let b = self.b;
        let a = a % b;
        let total = match &self.small {
            Some(small) => {
                let mut acc: i128 = 0;
                let mut r = 0u64;
                for k in 1..b {
                    r = (r + a) % b;
                    acc += k as i128 * small[r as usize];
                }
                BigInt::from(acc)
            }
            None => {
                let mut acc = BigInt::zero();
                let mut r = 0u64;
                for k in 1..b {
                    r = (r + a) % b;
                    acc += &self.table[r as usize] * k;
                }
                acc
            }
        };
        let scale = &self.denom * BigInt::from(b).pow(self.n + 1);
        Rational::new(total, scale)
    }
}

/// `s_n(a,b)` straight from its defining sum.
pub fn apostol_sum_naive(a: u64, b: u64, n: u32) -> Result<Rational> {
    check_pair(a, b)?;
    ApostolTable::new(b, n)?.sum(a)
}

/// `a b^n s_n(a,b) + b a^n s_n(b,a)` from the definitions.
pub fn reciprocity_lhs(a: u64, b: u64, n: u32) -> Result<Rational> {
    check_pair(a, b)?;
    if a == 0 {
        return Err(Error::ZeroGenerator { a, b });
    }
    let (ar, br) = (Rational::from(a), Rational::from(b));
    Ok(&ar * br.pow(n) * apostol_sum_naive(a, b, n)? + &br * ar.pow(n) * apostol_sum_naive(b, a, n)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReciprocityVariant {
    /// Bernoulli polynomial in `a` and `b`.
    Eq1,
    /// Through the gaps and the Apéry set of `ab`.
    Prop3,
    /// Through the gaps and the Apéry sets of `a` and `b`.
    Prop4,
}

impl ReciprocityVariant {
    pub const ALL: [ReciprocityVariant; 3] = [Self::Eq1, Self::Prop3, Self::Prop4];
}

/// The reciprocity polynomial
/// `sum_{k=0}^{n+1} (-1)^k n! B_k B_{n+1-k} x^k y^{n+1-k} / (k!(n+1-k)!) + n B_{n+1}/(n+1)`
/// stored with integer coefficients over a common denominator.
#[derive(Clone, Debug)]
struct ReciprocityPolynomial {
    n: u32,
    denom: BigInt,
    coeffs: Vec<BigInt>,
    constant: BigInt,
}

impl ReciprocityPolynomial {
    /// Shared instance per `n`; the descent evaluates it once per frame.
    fn cached(n: u32) -> Arc<Self> {
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<ReciprocityPolynomial>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(p) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&n) {
            return Arc::clone(p);
        }
        let p = Arc::new(Self::new(n));
        let mut w = cache.write().unwrap_or_else(|e| e.into_inner());
        Arc::clone(w.entry(n).or_insert(p))
    }

    fn new(n: u32) -> Self {
        let cs = paired_coefficients(n, true);
        let constant = paired_constant(n);
        let denom = cs
            .iter()
            .chain(std::iter::once(&constant))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let lift = |c: &Rational| c.numer() * (&denom / c.denom());
        ReciprocityPolynomial {
            n,
            coeffs: cs.iter().map(lift).collect(),
            constant: lift(&constant),
            denom,
        }
    }

    /// Numerator over `self.denom` at `(x, y)`.
    fn eval_numer(&self, x: u64, y: u64) -> BigInt {
        let (x, y) = (BigInt::from(x), BigInt::from(y));
        let mut acc = self.constant.clone();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c * x.pow(k as u32) * y.pow(self.n + 1 - k as u32);
        }
        acc
    }

    fn eval(&self, x: u64, y: u64) -> Rational {
        Rational::new(self.eval_numer(x, y), self.denom.clone()).expect("nonzero denominator")
    }
}

/// Second sum shared by the gap routes:
/// `sum_i (-1)^i n! B_i B_{n-i+1} (sum over moduli of m^{n-i+1}) / (i!(n-i+1)!)`.
fn paired_sum_over(moduli: &[u64], n: u32, signed: bool) -> Rational {
    paired_coefficients(n, signed)
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let powers: Rational = moduli.iter().map(|&m| Rational::from(m).pow(n + 1 - i as u32)).sum();
            c * powers
        })
        .sum()
}

/// Right-hand side of the reciprocity law by the chosen route.
pub fn reciprocity_rhs(a: u64, b: u64, n: u32, variant: ReciprocityVariant) -> Result<Rational> {
    reciprocity_rhs_form(a, b, n, variant, RhsForm::CORRECTED)
}

/// Knobs for the known misprints of the gap routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RhsForm {
    /// Alternating sign in the paired Bernoulli sum.
    pub signed: bool,
    /// Reduce gaps mod `a` and mod `b` before taking powers (`Ap_a`/`Ap_b` route only).
    pub reduced: bool,
}

impl RhsForm {
    pub const CORRECTED: RhsForm = RhsForm { signed: true, reduced: true };
}

pub(crate) fn reciprocity_rhs_form(
    a: u64,
    b: u64,
    n: u32,
    variant: ReciprocityVariant,
    form: RhsForm,
) -> Result<Rational> {
    let s = NumericalSemigroup::new(a, b)?;
    check_odd(n)?;
    let bern: Vec<Rational> = (0..=n).map(bernoulli_number).collect();
    Ok(match variant {
        ReciprocityVariant::Eq1 => ReciprocityPolynomial::cached(n).eval(a, b),
        ReciprocityVariant::Prop3 => {
            let ab = Rational::from(a * b);
            let gap_part: Rational = (0..=n)
                .map(|i| Rational::from(binomial(n, i)) * ab.pow(i) * &bern[i as usize] * s.sylvester_sum(n - i))
                .sum();
            gap_part + paired_sum_over(&[a * b], n, form.signed) + paired_constant(n)
        }
        ReciprocityVariant::Prop4 => {
            // B̄_n(k/b) needs k mod b; gaps can exceed b.
            let (ar, br) = (Rational::from(a), Rational::from(b));
            let gap_sum = |d: u64, j: u32| {
                if form.reduced {
                    reduced_gap_power_sum(&s, d, j)
                } else {
                    s.sylvester_sum(j)
                }
            };
            let gap_part: Rational = (0..=n)
                .map(|i| {
                    let inner = br.pow(i) * gap_sum(b, n - i) + ar.pow(i) * gap_sum(a, n - i);
                    Rational::from(binomial(n, i)) * &bern[i as usize] * inner
                })
                .sum();
            gap_part + paired_sum_over(&[a, b], n, form.signed) + Rational::from(2) * paired_constant(n)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReciprocityReport {
    pub a: u64,
    pub b: u64,
    pub n: u32,
    pub variant: ReciprocityVariant,
    pub lhs: Rational,
    pub rhs: Rational,
    pub equal: bool,
}

impl ReciprocityReport {
    pub fn compute(a: u64, b: u64, n: u32, variant: ReciprocityVariant) -> Result<Self> {
        let rhs = reciprocity_rhs(a, b, n, variant)?;
        let lhs = reciprocity_lhs(a, b, n)?;
        Ok(ReciprocityReport {
            a,
            b,
            n,
            variant,
            equal: lhs == rhs,
            lhs,
            rhs,
        })
    }
}

/// Result of [`apostol_sum_fast_traced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastEvaluation {
    pub value: Rational,
    /// Descent frames that performed a division step.
    pub depth: usize,
}

/// `s_n(a,b)` for odd `n` by reciprocity descent.
pub fn apostol_sum_fast(a: u64, b: u64, n: u32) -> Result<Rational> {
    apostol_sum_fast_traced(a, b, n).map(|e| e.value)
}

/// [`apostol_sum_fast`] together with its descent depth, which equals the
/// number of division steps of the Euclidean algorithm on `(b, a mod b)`.
pub fn apostol_sum_fast_traced(a: u64, b: u64, n: u32) -> Result<FastEvaluation> {
    check_pair(a, b)?;
    check_odd(n)?;
    let (mut x, mut y) = (a % b, b);
    if y == 1 {
        return Ok(FastEvaluation {
            value: Rational::zero(),
            depth: 0,
        });
    }
    let poly = ReciprocityPolynomial::cached(n);
    // Each frame (x, y) means s(x,y) = (R(x,y) - y x^n s(y mod x, x)) / (x y^n).
    let mut frames = Vec::new();
    loop {
        if x == 1 {
            break;
        }
        frames.push((x, y));
        (x, y) = (y % x, x);
    }
    let depth = frames.len() + 1;
    // s_n(1, y) = W(y, n) / y^n, and W(y, n) is the reciprocity polynomial at (1, y).
    let mut numer = poly.eval_numer(1, y);
    let mut denom = &poly.denom * BigInt::from(y).pow(n);
    for &(x, y) in frames.iter().rev() {
        let (xb, yb) = (BigInt::from(x), BigInt::from(y));
        let r = poly.eval_numer(x, y);
        numer = r * &denom - &poly.denom * &yb * xb.pow(n) * numer;
        denom = denom * &poly.denom * xb * yb.pow(n);
    }
    Ok(FastEvaluation {
        value: Rational::new(numer, denom)?,
        depth,
    })
}

/// Outcome of the generic Apéry-set-of-`ab` reciprocity scheme.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MordellCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub hypotheses_hold: bool,
}

/// Generic reciprocity through the Apéry set of `ab`.
///
/// `f` must satisfy `f(ia/b) = alpha_a sum_{j<a} f(i/b + j/a) + beta_a` for
/// `i < b` and the mirrored relation for `j < a`; `hypotheses_hold` reports
/// whether it does. Whenever it does, `lhs == rhs`.
pub fn mordell_reciprocity_check(
    s: &NumericalSemigroup,
    f: &FunctionSpec,
    rep: &ReplicationData,
) -> Result<MordellCheck> {
    if !f.accepts_rationals() {
        return Err(Error::NeedsRationalArguments);
    }
    let (a, b) = (s.a(), s.b());
    let (ai, bi) = (a as i64, b as i64);
    let ab = ai * bi;
    let frac = |p: i64, q: i64| Rational::frac(p, q);
    let mut hypotheses_hold = true;
    for i in 0..bi {
        let inner = (0..ai).map(|j| f.eval(&frac(i * ai + j * bi, ab))).collect::<Result<Vec<_>>>()?;
        let rhs = &rep.alpha_a * inner.into_iter().sum::<Rational>() + &rep.beta_a;
        hypotheses_hold &= f.eval(&frac(i * ai, bi))? == rhs;
    }
    for j in 0..ai {
        let inner = (0..bi).map(|i| f.eval(&frac(i * ai + j * bi, ab))).collect::<Result<Vec<_>>>()?;
        let rhs = &rep.alpha_b * inner.into_iter().sum::<Rational>() + &rep.beta_b;
        hypotheses_hold &= f.eval(&frac(j * bi, ai))? == rhs;
    }

    let weighted = |t: Rational| -> Result<Rational> { Ok(f.eval(&t)? * t) };
    let mut left_b = RationalSum::new();
    for i in 0..bi {
        left_b.add(&(frac(i, bi) * f.eval(&frac(i * ai, bi))?));
    }
    let mut left_a = RationalSum::new();
    for j in 0..ai {
        left_a.add(&(frac(j, ai) * f.eval(&frac(j * bi, ai))?));
    }
    let lhs = &rep.alpha_b * left_b.finish() + &rep.alpha_a * left_a.finish();

    let mut inner = RationalSum::new();
    for &k in &s.gaps().elements {
        let t = frac(k as i64, ab);
        inner.add(&(weighted(&t + Rational::one())? - weighted(t)?));
    }
    for k in 0..ab {
        inner.add(&weighted(frac(k, ab))?);
    }
    let half = Rational::frac(1, 2);
    let rhs = &rep.alpha_a * &rep.alpha_b * inner.finish()
        + &rep.alpha_b * &rep.beta_a * Rational::from(b - 1) * &half
        + &rep.alpha_a * &rep.beta_b * Rational::from(a - 1) * &half;
    Ok(MordellCheck {
        lhs,
        rhs,
        hypotheses_hold,
    })
}

/// Generic reciprocity through the Apéry sets of `a` and `b`: two weighted
/// instances of the Tuenter identity. Holds for every evaluable `h`.
pub fn tuenter_reciprocity_check(
    s: &NumericalSemigroup,
    h: &FunctionSpec,
    g_ab: &Rational,
    g_ba: &Rational,
) -> Result<Sides> {
    if !h.accepts_rationals() {
        return Err(Error::NeedsRationalArguments);
    }
    let (ai, bi) = (s.a() as i64, s.b() as i64);
    let weighted = |t: Rational| -> Result<Rational> { Ok(h.eval(&t)? * t) };
    // sum_{k<d} F(mult*k/d), with F(t) = t h(t)
    let diag = |mult: i64, d: i64| -> Result<Rational> {
        (0..d).map(|k| weighted(Rational::frac(mult * k, d))).sum::<Result<Rational>>()
    };
    let gaps = s.gaps().elements;
    let telescoped = |d: i64| -> Result<Rational> {
        gaps.iter()
            .map(|&k| {
                let t = Rational::frac(k as i64, d);
                Ok(weighted(&t + Rational::one())? - weighted(t)?)
            })
            .sum::<Result<Rational>>()
    };
    let lhs = g_ab * diag(ai, bi)? + g_ba * diag(bi, ai)?;
    let rhs = g_ab * (diag(1, bi)? + telescoped(bi)?) + g_ba * (diag(1, ai)? + telescoped(ai)?);
    Ok(Sides { lhs, rhs })
}
