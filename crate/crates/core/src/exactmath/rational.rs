//! Integer and rational helpers: factorials, binomials, and the signed
//! double factorial used by the closed-form Ehrhart and volume formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `total! / prod(parts!)`, or `None` if the parts do not sum to `total`
/// or any part is negative.
pub fn multinomial(total: i64, parts: &[i64]) -> Option<BigInt> {
    if total < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != total {
        return None;
    }
    let denom = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p as u64));
    Some(factorial(total as u64) / denom)
}

/// Signed double factorial `(2q-3)!! = -prod_{r=1}^{q} (2r-3)` taking
/// `k = 2q - 3`: `(-3)!! = -1`, `(-1)!! = 1`, `1!! = 1`, `3!! = 3`.
///
/// Only odd `k >= -3` are accepted.
pub fn signed_double_factorial(k: i64) -> Result<BigRational> {
    if k < -3 || k.rem_euclid(2) == 0 {
        return Err(Error::DoubleFactorialArgument(k));
    }
    let q = (k + 3) / 2;
    let prod = (1..=q).fold(BigInt::one(), |acc, r| acc * BigInt::from(2 * r - 3));
    Ok(BigRational::from_integer(-prod))
}
