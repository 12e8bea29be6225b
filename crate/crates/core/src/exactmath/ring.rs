use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact commutative ring containing the rationals, used as the coefficient
/// type of [`TruncatedSeries`](super::TruncatedSeries).
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, factor: &BigRational) -> Self;
    fn from_rational(value: BigRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
        self * factor
    }
    fn from_rational(value: BigRational) -> Self {
        value
    }
}
