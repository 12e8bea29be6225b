use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::check_parking_range;
use crate::error::Result;
use crate::exactmath::{binomial, factorial, multinomial, signed_double_factorial, RationalPoly};

/// Closed double sum over `0 <= i <= m/2`, `2i <= j <= m` of
/// `(-1)^(i+1) C(m; m-j, j-2i, i, i) i! (2j-4i-3)!! t^(j-i) (2nt+t+2)^(m-j)`,
/// divided by `2^m`.
pub fn ehrhart_closed(m: usize, n: u64) -> Result<RationalPoly> {
    ehrhart_closed_with(m, n, &signed_double_factorial)
}

/// Same sum with a caller-supplied double factorial, so the verification
/// harness can inject a faulty one.
pub(crate) fn ehrhart_closed_with(
    m: usize,
    n: u64,
    double_factorial: &dyn Fn(i64) -> Result<BigRational>,
) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    let mi = m as i64;
    let n = n as i64;
    // 2nt + t + 2
    let base = RationalPoly::from_integers(&[2, 2 * n + 1]);
    let mut acc = RationalPoly::zero();
    for i in 0..=mi / 2 {
        for j in 2 * i..=mi {
            let Some(multi) = multinomial(mi, &[mi - j, j - 2 * i, i, i]) else {
                continue;
            };
            let sign = if i % 2 == 0 { -1 } else { 1 };
            let coeff = BigRational::from_integer(multi * factorial(i as u64) * sign)
                * double_factorial(2 * j - 4 * i - 3)?;
            let term =
                &RationalPoly::monomial(coeff, (j - i) as usize) * &base.pow((mi - j) as u32);
            acc = &acc + &term;
        }
    }
    Ok(acc.scale(&BigRational::new(
        BigInt::one(),
        BigInt::from(2).pow(m as u32),
    )))
}

/// `-(1/2^m) sum_{i=0}^{m} C(m, i) (2i-3)!! (2n+1)^(m-i)`.
pub fn volume_closed(m: usize, n: u64) -> Result<BigRational> {
    check_parking_range(m, n)?;
    let base = BigInt::from(2 * n + 1);
    let mut acc = BigRational::zero();
    for i in 0..=m {
        let term =
            BigRational::from_integer(binomial(m as u64, i as u64) * base.pow((m - i) as u32))
                * signed_double_factorial(2 * i as i64 - 3)?;
        acc += term;
    }
    Ok(-acc / BigRational::from_integer(BigInt::from(2).pow(m as u32)))
}
