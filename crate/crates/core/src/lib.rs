//! Exact rational machinery for Apostol–Dedekind sums and the summation
//! identities of two-generator numerical semigroups.
//!
//! - [`rational`]: normalized big rationals
//! - [`bernoulli`]: Bernoulli numbers, polynomials, periodic functions, power sums
//! - [`semigroup`]: `S(a,b)` membership, gaps, Apéry sets, Sylvester sums, identities
//! - [`dedekind`]: `s_n(a,b)`, reciprocity right-hand sides, Euclidean descent
//! - [`spectra`]: power sums of the Brieskorn spectrum `j/a + i/b`
//! - [`knot`]: integral of the torus-knot signature function
//! - [`errata`]: the formulas as printed, kept for regression comparison

pub mod arith;
pub mod bernoulli;
pub mod dedekind;
pub mod errata;
pub mod error;
pub mod function;
pub mod knot;
pub mod rational;
pub mod semigroup;
pub mod spectra;

use serde::Serialize;

pub use error::{Error, Result};
pub use function::{FunctionSpec, ReplicationData};
pub use rational::Rational;
pub use semigroup::NumericalSemigroup;

/// Left and right side of an identity, both evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluation route for operations that have a brute-force and a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    Closed,
}
