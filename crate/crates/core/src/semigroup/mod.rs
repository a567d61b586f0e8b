//! Numerical semigroups `S(a,b)` generated by two coprime positive integers.
//!
//! Membership is O(1): with `y = k b^{-1} mod a`, `k` lies in `S` exactly when
//! `y b <= k`, because `y b` is the smallest multiple of `b` congruent to `k`
//! modulo `a`.

mod identity;
mod poly;

pub use identity::{identity_residual, Identity, IdentityEvaluator};
pub use poly::SparsePoly;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::arith::{factorial, gcd, inverse_mod};
use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    a: u64,
    b: u64,
    b_inv_mod_a: u64,
}

impl NumericalSemigroup {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::ZeroGenerator { a, b });
        }
        if gcd(a, b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(NumericalSemigroup {
            a,
            b,
            b_inv_mod_a: inverse_mod(b, a),
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Generators as `(min, max)`.
    pub fn canonical(&self) -> (u64, u64) {
        (self.a.min(self.b), self.a.max(self.b))
    }

    pub fn product(&self) -> u64 {
        self.a * self.b
    }

    pub fn contains(&self, k: i64) -> bool {
        if k < 0 {
            return false;
        }
        let k = k as u128;
        let y = (k % self.a as u128) * self.b_inv_mod_a as u128 % self.a as u128;
        y * self.b as u128 <= k
    }

    /// Largest gap, `ab - a - b`; `-1` when a generator is one.
    pub fn frobenius(&self) -> i64 {
        (self.a * self.b) as i64 - self.a as i64 - self.b as i64
    }

    pub fn gaps(&self) -> GapSet {
        let elements = (1..=self.frobenius().max(0))
            .filter(|&k| !self.contains(k))
            .map(|k| k as u64)
            .collect();
        GapSet { elements }
    }

    /// Gaps as `{ab - ia - jb : 0<i<b, 0<j<a, ia+jb<ab}`, sorted.
    pub fn gaps_by_lattice(&self) -> Vec<u64> {
        let ab = self.a * self.b;
        let mut out: Vec<u64> = self.below_line_points().map(|(i, j)| ab - i * self.a - j * self.b).collect();
        out.sort_unstable();
        out
    }

    /// Lattice points `(i, j)` with `0<i<b`, `0<j<a`, `ia + jb < ab`.
    pub fn below_line_points(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        let (a, b) = (self.a, self.b);
        (1..b).flat_map(move |i| (1..a).filter(move |&j| i * a + j * b < a * b).map(move |j| (i, j)))
    }

    pub fn apery_set(&self, m: u64) -> Result<AperySet> {
        if m == 0 || !self.contains(m as i64) {
            return Err(Error::NotInSemigroup { a: self.a, b: self.b, m });
        }
        let mut slots: Vec<Option<u64>> = vec![None; m as usize];
        let mut remaining = m;
        // Every residue class has a member of S at or below frobenius + m.
        let bound = (self.frobenius() + m as i64).max(0) as u64;
        for s in 0..=bound {
            if remaining == 0 {
                break;
            }
            if !self.contains(s as i64) {
                continue;
            }
            let slot = &mut slots[(s % m) as usize];
            if slot.is_none() {
                *slot = Some(s);
                remaining -= 1;
            }
        }
        debug_assert_eq!(remaining, 0);
        let mut elements: Vec<u64> = slots.into_iter().flatten().collect();
        elements.sort_unstable();
        Ok(AperySet { m, elements })
    }

    /// `sum_{k in gaps} k^m`.
    pub fn sylvester_sum(&self, m: u32) -> Rational {
        let total: BigInt = self.gaps().elements.iter().map(|&k| BigInt::from(k).pow(m)).sum();
        Rational::from(total)
    }

    /// Number of pairs `(x, y)` of nonnegative integers with `xa + yb = k`.
    pub fn representation_count(&self, k: u64) -> u64 {
        (0..=k / self.b).filter(|y| (k - y * self.b).is_multiple_of(self.a)).count() as u64
    }

    /// `{e + (n-1)ab : e in Ap_{ab}}`, the elements with exactly `n`
    /// representations, sorted.
    pub fn r_set_window(&self, n: u32) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::OrderTooSmall { n, min: 1 });
        }
        let ab = self.product();
        let shift = (n as u64 - 1) * ab;
        Ok(self.apery_set(ab)?.elements.into_iter().map(|e| e + shift).collect())
    }

    /// `sum q^k` over the gaps or over an Apéry set.
    pub fn gen_poly(&self, kind: GenPolyKind) -> Result<SparsePoly> {
        let exps = match kind {
            GenPolyKind::Gaps => self.gaps().elements,
            GenPolyKind::Apery(m) => self.apery_set(m)?.elements,
        };
        Ok(SparsePoly::from_exponents(exps))
    }

    /// `(q^{m} - 1) ((q - 1) G(q) + 1)` against `(q - 1) A_m(q)`, where `G`
    /// is the gap polynomial and `A_m` the Apéry polynomial.
    pub fn genfun_gap_residual(&self, m: u64) -> Result<(SparsePoly, SparsePoly)> {
        let q_minus_1 = SparsePoly::q_power_minus_one(1);
        let gaps = self.gen_poly(GenPolyKind::Gaps)?;
        let apery = self.gen_poly(GenPolyKind::Apery(m))?;
        let lhs = &SparsePoly::q_power_minus_one(m) * &(&(&q_minus_1 * &gaps) + &SparsePoly::one());
        let rhs = &q_minus_1 * &apery;
        Ok((lhs, rhs))
    }

    /// `A_{m1}(q) (q^{m2} - 1)` against `A_{m2}(q) (q^{m1} - 1)`.
    pub fn genfun_cross_residual(&self, m1: u64, m2: u64) -> Result<(SparsePoly, SparsePoly)> {
        let a1 = self.gen_poly(GenPolyKind::Apery(m1))?;
        let a2 = self.gen_poly(GenPolyKind::Apery(m2))?;
        Ok((
            &a1 * &SparsePoly::q_power_minus_one(m2),
            &a2 * &SparsePoly::q_power_minus_one(m1),
        ))
    }

    /// `R_n(q) (q^a - 1)(q^b - 1)` against `q^{(n-1)ab} (q^{ab} - 1)^2`.
    pub fn r_set_genfun_residual(&self, n: u32) -> Result<(SparsePoly, SparsePoly)> {
        let window = SparsePoly::from_exponents(self.r_set_window(n)?);
        let lhs = &(&window * &SparsePoly::q_power_minus_one(self.a)) * &SparsePoly::q_power_minus_one(self.b);
        let ab = self.product();
        let sq = &SparsePoly::q_power_minus_one(ab) * &SparsePoly::q_power_minus_one(ab);
        let rhs = &SparsePoly::monomial((n as u64 - 1) * ab, Rational::one()) * &sq;
        Ok((lhs, rhs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenPolyKind {
    Gaps,
    Apery(u64),
}

/// Sorted gaps of a semigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GapSet {
    pub elements: Vec<u64>,
}

impl GapSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, k: u64) -> bool {
        self.elements.binary_search(&k).is_ok()
    }
}

/// Minimal semigroup element in each residue class modulo `m`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperySet {
    pub m: u64,
    pub elements: Vec<u64>,
}

impl Serialize for AperySet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(serializer)
    }
}

/// `S_{a,b}(m-1)` from the double Bernoulli sum
/// `sum_{i=0}^{m} sum_{j=0}^{m-i} (m-1)! / (i! j! (m-i-j+1)!) B_i B_j a^{m-j} b^{m-i} - B_m / m`.
pub fn sylvester_sum_closed(a: u64, b: u64, m: u32) -> Result<Rational> {
    NumericalSemigroup::new(a, b)?;
    if m == 0 {
        return Err(Error::OrderTooSmall { n: m, min: 1 });
    }
    let (ar, br) = (Rational::from(a), Rational::from(b));
    let top = Rational::from(factorial(m - 1));
    let mut terms = Vec::new();
    for i in 0..=m {
        for j in 0..=m - i {
            let denom = factorial(i) * factorial(j) * factorial(m - i - j + 1);
            terms.push(
                &top / &Rational::from(denom)
                    * bernoulli_number(i)
                    * bernoulli_number(j)
                    * ar.pow(m - j)
                    * br.pow(m - i),
            );
        }
    }
    let sum: Rational = terms.into_iter().sum();
    Ok(sum - bernoulli_number(m) / Rational::from(m))
}

/// `sum_{k in gaps} (k mod d)^m`: gap power sums after reduction modulo `d`.
pub(crate) fn reduced_gap_power_sum(s: &NumericalSemigroup, d: u64, m: u32) -> Rational {
    let total: BigInt = s.gaps().elements.iter().map(|&k| BigInt::from(k % d).pow(m)).sum();
    Rational::from(total)
}
