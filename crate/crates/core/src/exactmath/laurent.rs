use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::RationalPoly;
use super::ring;

/// Laurent polynomial in `t` with rational coefficients.
///
/// `coeffs[k]` is the coefficient of `t^(min_exponent + k)`. Both ends of
/// `coeffs` are nonzero; the zero polynomial stores no coefficients and has
/// `min_exponent == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_exponent: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn new(min_exponent: i64, coeffs: Vec<BigRational>) -> Self {
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        LaurentPoly {
            min_exponent: min_exponent + first as i64,
            coeffs: coeffs[first..=last].to_vec(),
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            min_exponent: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(c: BigRational, exponent: i64) -> Self {
        Self::new(exponent, vec![c])
    }

    pub fn min_exponent(&self) -> i64 {
        self.min_exponent
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        let k = exponent - self.min_exponent;
        if k < 0 {
            return BigRational::zero();
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn max_exponent(&self) -> i64 {
        self.min_exponent + self.coeffs.len() as i64 - 1
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        LaurentPoly {
            min_exponent: self.min_exponent + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Converts to an ordinary polynomial, or returns the offending minimum
    /// exponent if a negative power of `t` is present.
    pub fn to_poly(&self) -> Result<RationalPoly, i64> {
        if self.coeffs.is_empty() {
            return Ok(RationalPoly::zero());
        }
        if self.min_exponent < 0 {
            return Err(self.min_exponent);
        }
        let mut coeffs = vec![BigRational::zero(); self.min_exponent as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        Ok(RationalPoly::new(coeffs))
    }

    fn combine(&self, other: &Self, sign: &BigRational) -> Self {
        if self.coeffs.is_empty() {
            return ring::Ring::scale(other, sign);
        }
        if other.coeffs.is_empty() {
            return self.clone();
        }
        let lo = self.min_exponent.min(other.min_exponent);
        let hi = self.max_exponent().max(other.max_exponent());
        let coeffs = (lo..=hi)
            .map(|e| self.coeff(e) + other.coeff(e) * sign)
            .collect();
        Self::new(lo, coeffs)
    }
}

impl From<&RationalPoly> for LaurentPoly {
    fn from(p: &RationalPoly) -> Self {
        LaurentPoly::new(0, p.coefficients().to_vec())
    }
}

impl ring::Ring for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        Self::monomial(<BigRational as ring::Ring>::one(), 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.combine(other, &<BigRational as ring::Ring>::one())
    }
    fn sub(&self, other: &Self) -> Self {
        self.combine(other, &-<BigRational as ring::Ring>::one())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out =
            vec![<BigRational as Zero>::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.min_exponent + other.min_exponent, out)
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            min_exponent: self.min_exponent,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn scale(&self, factor: &BigRational) -> Self {
        Self::new(
            self.min_exponent,
            self.coeffs.iter().map(|c| c * factor).collect(),
        )
    }
    fn from_rational(value: BigRational) -> Self {
        Self::monomial(value, 0)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})t^{}", self.min_exponent + k as i64))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
