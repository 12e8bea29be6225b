//! Exact arithmetic substrate: rationals, dense and Laurent polynomials in
//! `t`, and truncated power series in `z` over either coefficient ring.

mod laurent;
mod poly;
mod rational;
mod ring;
mod series;

pub use laurent::LaurentPoly;
pub use num_rational::BigRational;
pub use poly::{eulerian_poly, poly_binomial_shifted, RationalPoly};
pub use rational::{binomial, factorial, multinomial, rat, rat_frac, signed_double_factorial};
pub use ring::Ring;
pub use series::TruncatedSeries;
