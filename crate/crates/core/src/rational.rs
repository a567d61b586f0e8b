//! Arbitrary-precision rationals.
//!
//! [`Rational`] is always normalized (positive denominator, coprime parts) and
//! serializes as the string `"p/q"`, or `"p"` when the denominator is one.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom` in lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literal fractions. Panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator in Rational::frac")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// `self - floor(self)`, always in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let (_, r) = self.numer().div_mod_floor(self.denom());
        Rational(BigRational::new_raw(r, self.denom().clone()))
    }

    /// Returns the value as an integer when the denominator is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    /// `self^exp`, with `t^0 = 1` for every `t` including zero.
    pub fn pow(&self, exp: u32) -> Self {
        Rational(Pow::pow(&self.0, exp))
    }

    /// `self^exp` for a signed exponent; negative powers of zero are an error.
    pub fn powi(&self, exp: i64) -> Result<Self> {
        let mag = u32::try_from(exp.unsigned_abs()).map_err(|_| Error::OutOfDomain {
            what: "exponent does not fit in 32 bits",
        })?;
        if exp >= 0 {
            Ok(self.pow(mag))
        } else {
            Rational::one().checked_div(&self.pow(mag))
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational(&self.0 / &rhs.0))
        }
    }

    pub fn into_inner(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! from_prim {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(BigInt::from(n))
            }
        }
    )*};
}
from_prim!(i32, i64, i128, u32, u64, u128, usize);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Rational::new(p, q).map_err(|_| bad())
            }
            None => s.parse::<BigInt>().map(Rational::from).map_err(|_| bad()),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

// Division by zero panics, like integer division. Use `checked_div` when the
// divisor is not known to be nonzero.
impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(&rhs).expect("Rational division by zero")
    }
}

impl<'a> Div<&'a Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        self.checked_div(rhs).expect("Rational division by zero")
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self.checked_div(&rhs).expect("Rational division by zero")
    }
}

impl<'b> Div<&'b Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &'b Rational) -> Rational {
        self.checked_div(rhs).expect("Rational division by zero")
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}

/// Sums rationals without reducing after every term.
///
/// Terms are brought onto a running common denominator and the result is
/// normalized once at the end. Families of terms whose denominators divide
/// one another (powers of a fixed base, Bernoulli denominators) only cost a
/// big-integer multiply-add per term.
#[derive(Clone, Debug)]
pub struct RationalSum {
    numer: BigInt,
    denom: BigInt,
}

impl Default for RationalSum {
    fn default() -> Self {
        RationalSum {
            numer: BigInt::zero(),
            denom: BigInt::one(),
        }
    }
}

impl RationalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, r: &Rational) {
        let (p, q) = (r.numer(), r.denom());
        if p.is_zero() {
            return;
        }
        if *q == self.denom {
            self.numer += p;
        } else if (&self.denom % q).is_zero() {
            self.numer += p * (&self.denom / q);
        } else if (q % &self.denom).is_zero() {
            let k = q / &self.denom;
            self.numer *= &k;
            self.numer += p;
            self.denom = q.clone();
        } else {
            let g = self.denom.gcd(q);
            let left = q / &g;
            let right = &self.denom / &g;
            self.numer *= &left;
            self.numer += p * right;
            self.denom *= left;
        }
    }

    pub fn finish(self) -> Rational {
        Rational(BigRational::new(self.numer, self.denom))
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut acc = RationalSum::new();
        for r in iter {
            acc.add(&r);
        }
        acc.finish()
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        let mut acc = RationalSum::new();
        for r in iter {
            acc.add(r);
        }
        acc.finish()
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, r| acc * r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_are_normalized() {
        assert_eq!(r("6/4").to_string(), "3/2");
        assert_eq!(r("6/-4").to_string(), "-3/2");
        assert_eq!(r("-10/5").to_string(), "-2");
        assert_eq!(r(" 7 ").to_string(), "7");
        assert_eq!(r("0/9").to_string(), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a/2", "1/2/3", "1.5", "/3"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?} parsed");
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::one().checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(Error::DivisionByZero));
        assert!(Rational::zero().recip().is_err());
        assert!(Rational::zero().powi(-1).is_err());
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(r("7/3").floor(), BigInt::from(2));
        assert_eq!(r("-7/3").floor(), BigInt::from(-3));
        assert_eq!(r("-7/3").fract(), r("2/3"));
        assert_eq!(r("-1").fract(), Rational::zero());
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(Rational::zero().powi(0).unwrap(), Rational::one());
        assert_eq!(r("-2/3").powi(-3).unwrap(), r("-27/8"));
    }

    #[test]
    fn serde_uses_strings() {
        let v = vec![r("1/2"), r("-3"), r("0")];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["1/2","-3","0"]"#);
        let back: Vec<Rational> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<Rational>(r#""1/0""#).is_err());
    }

    #[test]
    fn accumulator_handles_unrelated_denominators() {
        let terms = [r("1/2"), r("1/3"), r("-5/6"), r("1/1024"), r("7/15")];
        let naive = terms.iter().fold(Rational::zero(), |acc, t| acc + t);
        assert_eq!(terms.iter().sum::<Rational>(), naive);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| Rational::frac(p, q))
    }

    proptest! {
        #[test]
        fn accumulated_sum_matches_pairwise(terms in prop::collection::vec(small_rational(), 0..40)) {
            let naive = terms.iter().fold(Rational::zero(), |acc, t| acc + t);
            prop_assert_eq!(terms.into_iter().sum::<Rational>(), naive);
        }

        #[test]
        fn display_parse_round_trip(x in small_rational()) {
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }

        #[test]
        fn fract_is_in_unit_interval(x in small_rational()) {
            let f = x.fract();
            prop_assert!(!f.is_negative() && f < 1, "{f}");
            prop_assert_eq!(Rational::from(x.floor()) + f, x);
        }
    }
}
