//! Small integer helpers shared across modules.

use num_bigint::BigInt;
use num_traits::One;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Number of division steps `(x, y) -> (y, x mod y)` until `y` reaches zero.
pub fn euclid_steps(mut x: u64, mut y: u64) -> usize {
    let mut steps = 0;
    while y != 0 {
        (x, y) = (y, x % y);
        steps += 1;
    }
    steps
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Inverse of `x` modulo `m` for coprime `x`, `m`; zero when `m == 1`.
pub fn inverse_mod(x: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i128, (x % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse_mod on non-coprime input");
    t0.rem_euclid(m as i128) as u64
}
