use crate::error::{Error, Result};
use crate::exactmath::{binomial, eulerian_poly, BigRational, RationalPoly};

fn t_plus_one() -> RationalPoly {
    RationalPoly::from_integers(&[1, 1])
}

/// Face-count polynomial: the coefficient of `t^i` is the number of
/// `i`-dimensional faces.
///
/// `1 + sum_{i=0}^{n-1} C(m, i) A_i(t+1) sum_{j=1}^{m-i} (t+1)^j`, where
/// `A_i` is the Eulerian polynomial.
pub fn f_polynomial(m: usize, n: u64) -> Result<RationalPoly> {
    if m == 0 || n == 0 {
        return Err(Error::NonPositiveParameters { m, n });
    }
    let s = t_plus_one();
    let mut acc = RationalPoly::one();
    for i in 0..(n as usize).min(m + 1) {
        let c = BigRational::from_integer(binomial(m as u64, i as u64));
        let geometric = (1..=m - i).fold(RationalPoly::zero(), |g, j| &g + &s.pow(j as u32));
        let term = &eulerian_poly(i).compose(&s) * &geometric;
        acc = &acc + &term.scale(&c);
    }
    Ok(acc)
}

/// `1 + (t+1) sum_{i=1}^{m} C(m, i) A_i(t+1)`, the face-count polynomial
/// shared by every `P(m, n)` with `n >= m`.
pub fn f_polynomial_stable(m: usize, n: u64) -> Result<RationalPoly> {
    if m == 0 || n == 0 {
        return Err(Error::NonPositiveParameters { m, n });
    }
    if n < m as u64 {
        return Err(Error::BelowStableRange { m, n });
    }
    let s = t_plus_one();
    let sum = (1..=m).fold(RationalPoly::zero(), |acc, i| {
        let c = BigRational::from_integer(binomial(m as u64, i as u64));
        &acc + &eulerian_poly(i).compose(&s).scale(&c)
    });
    Ok(&RationalPoly::one() + &(&s * &sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::polytope::PartialPermutohedron;

    #[test]
    fn triangle_and_pentagon() {
        assert_eq!(
            f_polynomial(2, 1).unwrap(),
            RationalPoly::from_integers(&[3, 3, 1])
        );
        assert_eq!(
            f_polynomial(2, 2).unwrap(),
            RationalPoly::from_integers(&[5, 5, 1])
        );
        assert_eq!(
            f_polynomial_stable(2, 2).unwrap(),
            RationalPoly::from_integers(&[5, 5, 1])
        );
        assert_eq!(
            f_polynomial_stable(1, 1).unwrap(),
            RationalPoly::from_integers(&[2, 1])
        );
    }

    #[test]
    fn stable_formula_rejects_parking_case() {
        assert_eq!(
            f_polynomial_stable(2, 1),
            Err(Error::BelowStableRange { m: 2, n: 1 })
        );
        // the formula itself would give the pentagon, not the triangle
        assert_ne!(
            f_polynomial(2, 1).unwrap(),
            f_polynomial_stable(2, 2).unwrap()
        );
    }

    #[test]
    fn stable_formula_is_n_independent() {
        for m in 1..=4usize {
            let stable = f_polynomial_stable(m, m as u64).unwrap();
            for n in m as u64..=m as u64 + 3 {
                assert_eq!(f_polynomial(m, n).unwrap(), stable, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn vertex_and_facet_coefficients_match_geometry() {
        for m in 1..=4usize {
            for n in 1..=5u64 {
                let f = f_polynomial(m, n).unwrap();
                let p = PartialPermutohedron::new(m, n).unwrap();
                assert_eq!(f.coeff(0), rat(p.vertices().len() as i64), "m={m} n={n}");
                assert_eq!(f.coeff(m), rat(1));
                assert_eq!(f.coeff(m - 1), rat(p.facets().len() as i64), "m={m} n={n}");
            }
        }
    }
}
