//! Exponential generating function routes, built on the tree function
//! `T(z) = sum_{k>=1} k^(k-1) z^k / k!`, which satisfies `T = z exp(T)`.

use num_rational::BigRational;

use super::check_parking_range;
use crate::error::{Error, Result};
use crate::exactmath::{
    factorial, rat, rat_frac, LaurentPoly, RationalPoly, Ring, TruncatedSeries,
};

type QSeries = TruncatedSeries<BigRational>;
type TSeries = TruncatedSeries<LaurentPoly>;

/// `T(z)` truncated after `z^order`.
pub fn tree_function(order: usize) -> QSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                return rat(0);
            }
            let k = k as u64;
            let num = num_bigint::BigInt::from(k).pow((k - 1) as u32);
            BigRational::new(num, factorial(k))
        })
        .collect();
    QSeries::new(order, coeffs)
}

fn lift(s: &QSeries) -> TSeries {
    s.map(|c| LaurentPoly::monomial(c.clone(), 0))
}

/// `m! t^m [z^m]` of a series with Laurent coefficients, which must come
/// out as an ordinary polynomial.
fn extract(series: &TSeries, m: usize) -> Result<RationalPoly> {
    let c = series
        .coeff(m)
        .scale(&BigRational::from_integer(factorial(m as u64)))
        .shift(m as i64);
    c.to_poly().map_err(Error::NegativePowerSurvived)
}

/// `m! t^m [z^m] sqrt(1-z) exp((n + 1/2 + 1/t) z - z^2/(4t))`.
pub fn ehrhart_egf(m: usize, n: u64) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    let linear = LaurentPoly::new(-1, vec![rat(1), rat(n as i64) + rat_frac(1, 2)]);
    let quadratic = LaurentPoly::monomial(rat_frac(-1, 4), -1);
    let exponent = TSeries::new(m, vec![LaurentPoly::zero(), linear, quadratic]);
    let root = QSeries::new(m, vec![rat(1), rat(-1)]).sqrt()?;
    extract(&exponent.exp()?.mul(&lift(&root)), m)
}

/// `m! t^m [z^m] exp((n - m + 1/2 + 1/t) T - T^2/(4t)) / sqrt(1 - T)`,
/// with the square root taken as `exp(-log(1 - T)/2)`.
pub fn ehrhart_egf_via_tree(m: usize, n: u64) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    let tree = tree_function(m);
    let t_series = lift(&tree);
    let t_squared = t_series.mul(&t_series);
    let linear = LaurentPoly::new(-1, vec![rat(1), rat(n as i64 - m as i64) + rat_frac(1, 2)]);
    let quarter_inv_t = LaurentPoly::monomial(rat_frac(1, 4), -1);
    let log_one_minus = QSeries::one(m).sub(&tree).log()?;
    let exponent = t_series
        .scale_by(&linear)
        .sub(&t_squared.scale_by(&quarter_inv_t))
        .sub(&lift(&log_one_minus.scale(&rat_frac(1, 2))));
    extract(&exponent.exp()?, m)
}

/// Both sides of `[z^k] f(T(z)) = [z^k] f(z) (1 - z) e^(kz)`: the left by
/// composing with the tree function, the right by direct multiplication.
pub fn coefficient_transfer_check(
    f: &RationalPoly,
    k: usize,
) -> Result<(BigRational, BigRational)> {
    let order = k.max(1);
    let outer = QSeries::from_poly(order, f);
    let lhs = QSeries::compose(&outer, &tree_function(order))?.coeff(k);
    let one_minus_z = QSeries::new(order, vec![rat(1), rat(-1)]);
    let rhs = outer
        .mul(&one_minus_z)
        .mul(&QSeries::exp_linear(order, &rat(k as i64)))
        .coeff(k);
    Ok((lhs, rhs))
}

/// `m! [z^m]` of the generating functions for trees, looped trees, enhanced
/// trees and quasitrees, in that order:
/// `T - T^2/2`, `T`, `T^2/2`, and `-T/2 - T^2/4 - log sqrt(1 - T)`.
pub fn structure_egf_counts(m: usize) -> Result<[BigRational; 4]> {
    let order = m.max(1);
    let tree = tree_function(order);
    let sq = tree.mul(&tree);
    let half_sq = sq.scale(&rat_frac(1, 2));
    let trees = tree.sub(&half_sq);
    let quasi = tree
        .scale(&rat_frac(-1, 2))
        .sub(&sq.scale(&rat_frac(1, 4)))
        .sub(&QSeries::one(order).sub(&tree).log()?.scale(&rat_frac(1, 2)));
    Ok([
        trees.egf_count(m),
        tree.egf_count(m),
        half_sq.egf_count(m),
        quasi.egf_count(m),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::ehrhart_closed;

    #[test]
    fn tree_function_coefficients() {
        let t = tree_function(10);
        assert_eq!(t.coeff(1), rat(1));
        assert_eq!(t.coeff(3), rat_frac(3, 2));
        assert_eq!(t, QSeries::variable(10).mul(&t.exp().unwrap()));
    }

    #[test]
    fn egf_low_orders() {
        for n in 1..=5u64 {
            assert_eq!(
                ehrhart_egf(1, n).unwrap(),
                RationalPoly::from_integers(&[1, n as i64])
            );
        }
        assert_eq!(
            ehrhart_egf(2, 2).unwrap(),
            RationalPoly::new(vec![rat(1), rat_frac(7, 2), rat_frac(7, 2)])
        );
    }

    #[test]
    fn tree_route_matches_direct_route() {
        for m in 1..=5usize {
            for n in (m as u64).saturating_sub(1).max(1)..=m as u64 + 2 {
                assert_eq!(
                    ehrhart_egf_via_tree(m, n).unwrap(),
                    ehrhart_egf(m, n).unwrap(),
                    "m={m} n={n}"
                );
                assert_eq!(ehrhart_egf(m, n).unwrap(), ehrhart_closed(m, n).unwrap());
            }
        }
    }

    #[test]
    fn transfer_examples() {
        let z = RationalPoly::t();
        assert_eq!(
            coefficient_transfer_check(&z, 3).unwrap(),
            (rat_frac(3, 2), rat_frac(3, 2))
        );
        assert_eq!(
            coefficient_transfer_check(&RationalPoly::one(), 0).unwrap(),
            (rat(1), rat(1))
        );
        let z2 = RationalPoly::monomial(rat(1), 2);
        assert_eq!(
            coefficient_transfer_check(&z2, 2).unwrap(),
            (rat(1), rat(1))
        );
    }

    #[test]
    fn structure_egf_small() {
        let [trees, looped, enhanced, quasi] = structure_egf_counts(3).unwrap();
        assert_eq!(
            (trees, looped, enhanced, quasi),
            (rat(3), rat(9), rat(6), rat(1))
        );
        let [_, _, _, quasi4] = structure_egf_counts(4).unwrap();
        // 4!/8 labelled 4-cycles plus 4 * 3 triangles with a pendant vertex
        assert_eq!(quasi4, rat(3 + 12));
    }
}
