//! Sums over Hall sequences and over multigraphs.

use super::check_parking_range;
use crate::combinat::{census, enumerate_graphs, gamma_inverse};
use crate::error::Result;
use crate::exactmath::{poly_binomial_shifted, rat, rat_frac, RationalPoly};

/// `binom(x + a - 1, a)` memoised by `a`.
struct ShiftedBinomials {
    x: RationalPoly,
    cache: Vec<RationalPoly>,
}

impl ShiftedBinomials {
    fn new(x: RationalPoly) -> Self {
        ShiftedBinomials {
            x,
            cache: Vec::new(),
        }
    }

    fn get(&mut self, a: u32) -> &RationalPoly {
        let a = a as usize;
        while self.cache.len() <= a {
            let next = poly_binomial_shifted(&self.x, self.cache.len() as u32);
            self.cache.push(next);
        }
        &self.cache[a]
    }
}

fn loop_variable(m: usize, n: u64) -> RationalPoly {
    // (n - m + 1) t
    RationalPoly::t().scale(&rat(n as i64 - m as i64 + 1))
}

/// Sum over admissible sequences `a` of
/// `prod_i binom((n-m+1)t + a_i - 1, a_i) * prod_{i<j} binom(t + a_ij - 1, a_ij)`.
/// The sequences are produced from the multigraph enumeration through the
/// inverse bijection.
pub fn ehrhart_postnikov(m: usize, n: u64) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    let mut loop_factor = ShiftedBinomials::new(loop_variable(m, n));
    let mut pair_factor = ShiftedBinomials::new(RationalPoly::t());
    let mut acc = RationalPoly::zero();
    for g in enumerate_graphs(m)? {
        let a = gamma_inverse(&g)?;
        let mut term = RationalPoly::one();
        for &k in a.loops() {
            if k > 0 {
                term = &term * loop_factor.get(k);
            }
        }
        for &k in a.pairs() {
            if k > 0 {
                term = &term * pair_factor.get(k);
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Sum over multigraphs of
/// `((n-m+1)t)^loops * t^singles * (t(t+1)/2)^pairs`, grouped by signature.
pub fn ehrhart_graphsum(m: usize, n: u64) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    let loop_weight = loop_variable(m, n);
    let single_weight = RationalPoly::t();
    let pair_weight = RationalPoly::new(vec![rat(0), rat_frac(1, 2), rat_frac(1, 2)]);
    let mut acc = RationalPoly::zero();
    for (stats, count) in census(m)? {
        let w = &(&loop_weight.pow(stats.n_loops) * &single_weight.pow(stats.n_single))
            * &pair_weight.pow(stats.n_pairs);
        acc = &acc + &w.scale(&rat(count as i64));
    }
    Ok(acc)
}
