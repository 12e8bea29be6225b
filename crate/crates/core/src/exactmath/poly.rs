//! Dense univariate polynomials in `t` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::{factorial, rat};
use super::ring;

/// `coefficients()[i]` is the coefficient of `t^i`. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(q(t))`.
    pub fn compose(&self, inner: &RationalPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// True if every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The unique polynomial of degree below `points.len()` through the given
    /// `(x, y)` pairs. The x values must be distinct.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let mut result = Self::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = Self::one();
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = &basis * &Self::new(vec![-xj.clone(), BigRational::one()]);
                denom *= xi - xj;
            }
            result = &result + &basis.scale(&(yi / denom));
        }
        result
    }
}

/// `binom(x + a - 1, a) = x (x+1) ... (x+a-1) / a!` as a polynomial in `t`.
pub fn poly_binomial_shifted(x: &RationalPoly, a: u32) -> RationalPoly {
    let mut acc = RationalPoly::one();
    for r in 0..a {
        acc = &acc * &(x + &RationalPoly::constant(rat(i64::from(r))));
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(u64::from(a))))
}

/// Descent generating polynomial of the permutations of `{1..i}`, with
/// `A_0 = 1`. Built from `A(i, k) = (k+1) A(i-1, k) + (i-k) A(i-1, k-1)`.
pub fn eulerian_poly(i: usize) -> RationalPoly {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for size in 2..=i {
        let mut next = vec![BigInt::zero(); size];
        for (k, slot) in next.iter_mut().enumerate() {
            if k < row.len() {
                *slot += &row[k] * BigInt::from(k + 1);
            }
            if k >= 1 {
                *slot += &row[k - 1] * BigInt::from(size - k);
            }
        }
        row = next;
    }
    RationalPoly::new(row.into_iter().map(BigRational::from_integer).collect())
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for RationalPoly {
            type Output = RationalPoly;
            fn $method(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl ring::Ring for RationalPoly {
    fn zero() -> Self {
        RationalPoly::zero()
    }
    fn one() -> Self {
        RationalPoly::one()
    }
    fn is_zero(&self) -> bool {
        RationalPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, factor: &BigRational) -> Self {
        RationalPoly::scale(self, factor)
    }
    fn from_rational(value: BigRational) -> Self {
        RationalPoly::constant(value)
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalPoly({self})")
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat_frac;
    use proptest::prelude::*;

    #[test]
    fn trims_and_reports_degree() {
        let p = RationalPoly::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(RationalPoly::zero().degree(), None);
        assert_eq!(RationalPoly::from_integers(&[0, 0]), RationalPoly::zero());
    }

    #[test]
    fn binomial_shifted_examples() {
        let t = RationalPoly::t();
        assert_eq!(poly_binomial_shifted(&t, 0), RationalPoly::one());
        assert_eq!(
            poly_binomial_shifted(&t, 2),
            RationalPoly::new(vec![rat(0), rat_frac(1, 2), rat_frac(1, 2)])
        );
        assert_eq!(
            poly_binomial_shifted(&RationalPoly::zero(), 3),
            RationalPoly::zero()
        );
        let two_t = t.scale(&rat(2));
        assert_eq!(poly_binomial_shifted(&two_t, 3).degree(), Some(3));
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_poly(0), RationalPoly::one());
        assert_eq!(eulerian_poly(1), RationalPoly::one());
        assert_eq!(eulerian_poly(2), RationalPoly::from_integers(&[1, 1]));
        assert_eq!(eulerian_poly(3), RationalPoly::from_integers(&[1, 4, 1]));
        assert_eq!(
            eulerian_poly(4),
            RationalPoly::from_integers(&[1, 11, 11, 1])
        );
    }

    #[test]
    fn eulerian_matches_descent_count() {
        use itertools::Itertools;
        for i in 1..=6usize {
            let mut counts = vec![0i64; i];
            for perm in (1..=i).permutations(i) {
                let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
                counts[descents] += 1;
            }
            assert_eq!(
                eulerian_poly(i),
                RationalPoly::from_integers(&counts),
                "i={i}"
            );
        }
    }

    #[test]
    fn eulerian_at_one_is_factorial() {
        for i in 0..=8u64 {
            assert_eq!(
                eulerian_poly(i as usize).eval_int(1),
                BigRational::from_integer(factorial(i))
            );
        }
    }

    #[test]
    fn binomial_shifted_matches_integer_binomial() {
        use crate::exactmath::rational::binomial;
        let t = RationalPoly::t();
        for a in 0..=6u32 {
            let p = poly_binomial_shifted(&t, a);
            for x0 in 1..=6u64 {
                let expected = binomial(x0 + u64::from(a) - 1, u64::from(a));
                assert_eq!(p.eval_int(x0 as i64), BigRational::from_integer(expected));
            }
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = RationalPoly::new(vec![rat(1), rat_frac(-3, 2), rat(0), rat_frac(7, 5)]);
        let pts: Vec<_> = (0..4).map(|x| (rat(x), p.eval_int(x))).collect();
        assert_eq!(RationalPoly::interpolate(&pts), p);
    }

    #[test]
    fn display_format() {
        let p = RationalPoly::new(vec![rat(1), rat_frac(-7, 2), rat(0), rat(1)]);
        assert_eq!(p.to_string(), "t^3 - 7/2*t + 1");
        assert_eq!(RationalPoly::zero().to_string(), "0");
    }

    fn small_rat() -> impl Strategy<Value = BigRational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat_frac(n, d))
    }

    fn small_poly() -> impl Strategy<Value = RationalPoly> {
        prop::collection::vec(small_rat(), 0..=7).prop_map(RationalPoly::new)
    }

    proptest! {
        #[test]
        fn distributive(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        }

        #[test]
        fn evaluation_is_multiplicative(p in small_poly(), q in small_poly(), c in small_rat()) {
            prop_assert_eq!((&p * &q).eval(&c), p.eval(&c) * q.eval(&c));
        }

        #[test]
        fn composition_evaluates(p in small_poly(), q in small_poly(), c in small_rat()) {
            prop_assert_eq!(p.compose(&q).eval(&c), p.eval(&q.eval(&c)));
        }
    }
}
