//! Formal power series in `z` truncated after `z^order`.
//!
//! Binary operations on series of different orders produce a result at the
//! smaller order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::poly::RationalPoly;
use super::rational::{factorial, rat};
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Pads with zeros or drops terms so that exactly `order + 1` are kept.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![R::zero(), R::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coeffs
    }

    /// `[z^k]`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            order,
            (0..=order)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            order,
            (0..=order)
                .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        self.map(|c| c.scale(factor))
    }

    pub fn scale_by(&self, factor: &R) -> Self {
        self.map(|c| c.mul(factor))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(order, out)
    }

    /// `exp(s)` for `s` with zero constant term, via `g' = s' g`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let n = self.order();
        let mut g = vec![R::one()];
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&g[k - j]).scale(&rat(j as i64)));
            }
            g.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
        }
        Ok(Self::new(n, g))
    }

    /// `log(s)` for `s` with constant term 1, via `s f' = s'`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm);
        }
        let n = self.order();
        let mut f = vec![R::zero()];
        for k in 1..=n {
            let mut acc = self.coeffs[k].scale(&rat(k as i64));
            for (j, fj) in f.iter().enumerate().take(k).skip(1) {
                acc = acc.sub(&fj.mul(&self.coeffs[k - j]).scale(&rat(j as i64)));
            }
            f.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(k))));
        }
        Ok(Self::new(n, f))
    }

    /// Square root with constant term 1 of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let n = self.order();
        let mut r = vec![R::one()];
        for k in 1..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc = acc.sub(&r[j].mul(&r[k - j]));
            }
            r.push(acc.scale(&half));
        }
        Ok(Self::new(n, r))
    }

    /// `outer(inner(z))`, requiring `inner` to have zero constant term.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ComposeConstantTerm);
        }
        let order = outer.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in outer.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }
}

impl TruncatedSeries<BigRational> {
    pub fn from_poly(order: usize, p: &RationalPoly) -> Self {
        Self::new(order, p.coefficients().to_vec())
    }

    /// Exponential generating function read-off: `k! [z^k]`.
    pub fn egf_count(&self, k: usize) -> BigRational {
        self.coeff(k) * BigRational::from_integer(factorial(k as u64))
    }

    /// `exp(c z)` for a rational constant `c`.
    pub fn exp_linear(order: usize, c: &BigRational) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = <BigRational as One>::one();
        for k in 0..=order {
            coeffs.push(term.clone());
            term = term * c / rat(k as i64 + 1);
        }
        Self::new(order, coeffs)
    }
}
