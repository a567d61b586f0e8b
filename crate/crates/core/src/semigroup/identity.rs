//! Gap-set / Apéry-set summation identities for an arbitrary test function.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::NumericalSemigroup;
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::rational::Rational;
use crate::Sides;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "identity", rename_all = "snake_case")]
pub enum Identity {
    /// `sum_{gaps} (f(k+m) - f(k)) = sum_{Ap_m} f(k) - sum_{k<m} f(k)`.
    GassertShor { m: u64 },
    /// `sum_{gaps} (f(k+b) - f(k)) = sum_{k<b} (f(ak) - f(k))`.
    Tuenter,
    /// `sum_{gaps} (f(k+ab) - f(k)) = sum_{i<b, j<a} f(ia+jb) - sum_{k<ab} f(k)`.
    Mordell,
    /// `sum_{0<i<b, 0<j<a} f(ia+jb) = sum_{below} f(ia+jb) + sum_{below} f(2ab-ia-jb)`.
    MordellSplit,
}

/// Evaluates the identities for one semigroup and one function.
///
/// `f` is tabulated once on `0..=max_arg` over a common denominator, so every
/// side of every identity reduces to big-integer sums of table entries.
#[derive(Clone, Debug)]
pub struct IdentityEvaluator {
    s: NumericalSemigroup,
    max_m: u64,
    gaps: Vec<u64>,
    scale: BigInt,
    table: Vec<BigInt>,
    prefix: Vec<BigInt>,
    gap_total: BigInt,
}

impl IdentityEvaluator {
    /// Prepares tables covering every identity, with Gassert–Shor available
    /// for moduli up to `max_m`.
    pub fn new(s: &NumericalSemigroup, f: &FunctionSpec, max_m: u64) -> Result<Self> {
        let ab = s.product();
        let max_arg = (2 * ab).max((s.frobenius() + max_m as i64).max(0) as u64).max(max_m);
        let values = (0..=max_arg)
            .map(|k| f.eval_int(k as i64))
            .collect::<Result<Vec<_>>>()?;
        let scale = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let table: Vec<BigInt> = values
            .iter()
            .map(|v| v.numer() * (&scale / v.denom()))
            .collect();
        let mut prefix = Vec::with_capacity(table.len() + 1);
        prefix.push(BigInt::zero());
        for t in &table {
            let next = prefix.last().unwrap() + t;
            prefix.push(next);
        }
        let gaps = s.gaps().elements;
        let gap_total = gaps.iter().map(|&k| &table[k as usize]).sum();
        Ok(IdentityEvaluator {
            s: *s,
            max_m,
            gaps,
            scale,
            table,
            prefix,
            gap_total,
        })
    }

    fn at(&self, k: u64) -> &BigInt {
        &self.table[k as usize]
    }

    fn finish(&self, lhs: BigInt, rhs: BigInt) -> Sides {
        Sides {
            lhs: Rational::new(lhs, self.scale.clone()).expect("scale is positive"),
            rhs: Rational::new(rhs, self.scale.clone()).expect("scale is positive"),
        }
    }

    fn shifted_gap_difference(&self, shift: u64) -> BigInt {
        let shifted: BigInt = self.gaps.iter().map(|&k| self.at(k + shift)).sum();
        shifted - &self.gap_total
    }

    pub fn residual(&self, identity: Identity) -> Result<Sides> {
        let (a, b) = (self.s.a(), self.s.b());
        let ab = a * b;
        Ok(match identity {
            Identity::GassertShor { m } => {
                if m > self.max_m {
                    return Err(Error::OutOfDomain {
                        what: "modulus exceeds the evaluator's prepared range",
                    });
                }
                let apery = self.s.apery_set(m)?;
                let lhs = self.shifted_gap_difference(m);
                let ap: BigInt = apery.elements.iter().map(|&k| self.at(k)).sum();
                self.finish(lhs, ap - &self.prefix[m as usize])
            }
            Identity::Tuenter => {
                let lhs = self.shifted_gap_difference(b);
                let diag: BigInt = (0..b).map(|k| self.at(a * k)).sum();
                self.finish(lhs, diag - &self.prefix[b as usize])
            }
            Identity::Mordell => {
                let lhs = self.shifted_gap_difference(ab);
                let grid: BigInt = (0..b).flat_map(|i| (0..a).map(move |j| i * a + j * b)).map(|k| self.at(k)).sum();
                self.finish(lhs, grid - &self.prefix[ab as usize])
            }
            Identity::MordellSplit => {
                let lhs: BigInt = (1..b)
                    .flat_map(|i| (1..a).map(move |j| i * a + j * b))
                    .map(|k| self.at(k))
                    .sum();
                let rhs: BigInt = self
                    .s
                    .below_line_points()
                    .map(|(i, j)| {
                        let v = i * a + j * b;
                        self.at(v) + self.at(2 * ab - v)
                    })
                    .sum();
                self.finish(lhs, rhs)
            }
        })
    }
}

/// Both sides of the selected identity for `S` and `f`.
pub fn identity_residual(s: &NumericalSemigroup, identity: Identity, f: &FunctionSpec) -> Result<Sides> {
    let max_m = match identity {
        Identity::GassertShor { m } => {
            if m == 0 || !s.contains(m as i64) {
                return Err(Error::NotInSemigroup { a: s.a(), b: s.b(), m });
            }
            m
        }
        _ => 0,
    };
    IdentityEvaluator::new(s, f, max_m)?.residual(identity)
}
