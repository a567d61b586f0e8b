use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational {0:?}, expected \"p/q\" or \"p\"")]
    ParseRational(String),

    #[error("gcd(a,b) must be 1, got a = {a}, b = {b}")]
    NotCoprime { a: u64, b: u64 },

    #[error("generators must be positive, got a = {a}, b = {b}")]
    ZeroGenerator { a: u64, b: u64 },

    #[error("{m} is not a nonzero element of S({a},{b}); its Apéry set is undefined")]
    NotInSemigroup { a: u64, b: u64, m: u64 },

    #[error("n = {0} is even; reciprocity is only available for odd n")]
    EvenOrder(u32),

    #[error("n = {n} is below the minimum {min}")]
    OrderTooSmall { n: u32, min: u32 },

    #[error("torus knot needs a, b >= 2, got a = {a}, b = {b}")]
    TrivialKnot { a: u64, b: u64 },

    #[error("q^t is only defined for integer t, got t = {0}")]
    NonIntegerExponent(Rational),

    #[error("the base of q^t must be nonzero")]
    ZeroBase,

    #[error("this check evaluates at non-integer points, which q^t does not support")]
    NeedsRationalArguments,

    #[error("{what}")]
    OutOfDomain { what: &'static str },
}
