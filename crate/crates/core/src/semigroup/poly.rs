use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::rational::Rational;

/// Sparse polynomial in one variable `q` with rational coefficients.
///
/// Zero coefficients are never stored, so equality is term-wise.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparsePoly {
    terms: BTreeMap<u64, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::one())
    }

    pub fn monomial(exp: u64, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `q^m - 1`.
    pub fn q_power_minus_one(m: u64) -> Self {
        let mut p = Self::monomial(m, Rational::one());
        p.add_term(0, -Rational::one());
        p
    }

    /// `sum q^e` over the given exponents (repeats accumulate).
    pub fn from_exponents<I: IntoIterator<Item = u64>>(exps: I) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.add_term(e, Rational::one());
        }
        p
    }

    pub fn add_term(&mut self, exp: u64, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: u64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.terms.iter().map(|(e, c)| c * q.pow(*e as u32)).sum()
    }
}

impl<'b> Add<&'b SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &'b SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'b> Sub<&'b SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &'b SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'b> Mul<&'b SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &'b SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `{"exponent": "coefficient"}` with decimal exponent keys.
impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), c)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancellation_drops_terms() {
        let p = SparsePoly::from_exponents([0, 3]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn geometric_series_times_q_minus_one() {
        let geo = SparsePoly::from_exponents(0..5);
        assert_eq!(&geo * &SparsePoly::q_power_minus_one(1), SparsePoly::q_power_minus_one(5));
    }

    #[test]
    fn json_map_with_string_keys() {
        let mut p = SparsePoly::from_exponents([0, 2, 10]);
        p.add_term(2, Rational::frac(-1, 2));
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"0":"1","2":"1/2","10":"1"}"#
        );
    }

    fn poly() -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec((0u64..12, -5i64..5), 0..8).prop_map(|ts| {
            let mut p = SparsePoly::zero();
            for (e, c) in ts {
                p.add_term(e, Rational::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn multiplication_is_evaluation_homomorphism(p in poly(), r in poly(), x in -3i64..4) {
            let x = Rational::from(x);
            prop_assert_eq!((&p * &r).eval(&x), p.eval(&x) * r.eval(&x));
            prop_assert_eq!((&p + &r).eval(&x), p.eval(&x) + r.eval(&x));
        }

        #[test]
        fn no_zero_coefficients_stored(p in poly(), r in poly()) {
            for s in [&p * &r, &p - &r, &p + &r] {
                prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
            }
        }
    }
}
