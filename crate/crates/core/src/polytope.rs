//! Geometry of the partial permutohedron `P(m, n)`: vertices, facet
//! inequalities, membership in dilates, brute-force lattice point counts,
//! the lift into `R^(m+1)` and the Minkowski decomposition into segments and
//! triangles.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Default cap on the number of candidate points the brute-force counter is
/// allowed to visit.
pub const DEFAULT_LATTICE_BUDGET: u128 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl Deref for LatticePoint {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    AtMost,
    AtLeast,
}

/// `coefficients . x  (<= | >=)  bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FacetInequality {
    pub coefficients: Vec<i64>,
    pub bound: i64,
    pub sense: Sense,
}

impl FacetInequality {
    fn lhs(&self, x: &[i64]) -> i64 {
        self.coefficients.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// Whether `x` satisfies the inequality scaled to the `t`-th dilate.
    pub fn holds(&self, x: &[i64], t: i64) -> bool {
        let lhs = self.lhs(x);
        match self.sense {
            Sense::AtMost => lhs <= t * self.bound,
            Sense::AtLeast => lhs >= t * self.bound,
        }
    }

    pub fn is_tight(&self, x: &[i64], t: i64) -> bool {
        self.lhs(x) == t * self.bound
    }
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coefficients.iter().enumerate() {
            match c {
                0 => {}
                1 => terms.push(format!("x{}", i + 1)),
                _ => terms.push(format!("{c}*x{}", i + 1)),
            }
        }
        let op = match self.sense {
            Sense::AtMost => "<=",
            Sense::AtLeast => ">=",
        };
        write!(f, "{} {op} {}", terms.join(" + "), self.bound)
    }
}

/// A weighted simplex `coefficient * conv(vertices)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub coefficient: u64,
    pub vertices: Vec<LatticePoint>,
}

/// The polytope `P(m, n)` with `m, n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PartialPermutohedron {
    m: usize,
    n: u64,
}

impl PartialPermutohedron {
    pub fn new(m: usize, n: u64) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::NonPositiveParameters { m, n });
        }
        Ok(PartialPermutohedron { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `n >= m - 1`, the range where the Ehrhart formulas hold.
    pub fn in_parking_range(&self) -> bool {
        self.n + 1 >= self.m as u64
    }

    fn rank(&self) -> usize {
        self.m.min(self.n as usize)
    }

    /// Sum of the `k` largest values `n, n-1, ..., n-k+1`.
    fn top_sum(&self, k: usize) -> i64 {
        let (k, n) = (k as i64, self.n as i64);
        k * n - k * (k - 1) / 2
    }

    /// Right-hand side of the full-sum inequality,
    /// `sum_{i = max(1, n-m+1)}^{n} i`.
    pub fn total_bound(&self) -> i64 {
        self.top_sum(self.rank())
    }

    /// All vertices, sorted lexicographically.
    pub fn vertices(&self) -> Vec<LatticePoint> {
        fn place(
            remaining: usize,
            next_value: i64,
            current: &mut Vec<i64>,
            out: &mut Vec<LatticePoint>,
        ) {
            if remaining == 0 {
                out.push(LatticePoint(current.clone()));
                return;
            }
            for slot in 0..current.len() {
                if current[slot] == 0 {
                    current[slot] = next_value;
                    place(remaining - 1, next_value - 1, current, out);
                    current[slot] = 0;
                }
            }
        }

        let mut out = Vec::new();
        let mut current = vec![0; self.m];
        for i in 0..=self.rank() {
            place(i, self.n as i64, &mut current, &mut out);
        }
        out.sort();
        out
    }

    /// One inequality per facet: the `m` nonnegativity constraints, then
    /// `sum_{i in S} x_i <= top_sum(|S|)` for every `S` with
    /// `1 <= |S| <= min(m, n) - 1` (grouped by size, lexicographic within a
    /// size), then the full-sum constraint.
    pub fn facets(&self) -> Vec<FacetInequality> {
        let m = self.m;
        let mut out: Vec<FacetInequality> = (0..m)
            .map(|i| {
                let mut c = vec![0; m];
                c[i] = 1;
                FacetInequality {
                    coefficients: c,
                    bound: 0,
                    sense: Sense::AtLeast,
                }
            })
            .collect();
        for k in 1..self.rank() {
            for subset in k_subsets(m, k) {
                let mut c = vec![0; m];
                for i in subset {
                    c[i] = 1;
                }
                out.push(FacetInequality {
                    coefficients: c,
                    bound: self.top_sum(k),
                    sense: Sense::AtMost,
                });
            }
        }
        out.push(FacetInequality {
            coefficients: vec![1; m],
            bound: self.total_bound(),
            sense: Sense::AtMost,
        });
        out
    }

    /// Membership of `x` in the dilate `t * P(m, n)`.
    ///
    /// Each subset constraint only depends on `|S|`, so for each size the
    /// binding subset is the one holding the largest entries.
    ///
    /// # Panics
    /// If `x.len() != m`.
    pub fn contains(&self, t: u64, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.m, "point has wrong dimension");
        self.partial_feasible(t as i64, x)
    }

    /// Necessary condition for a partial assignment of coordinates; equals
    /// membership once all `m` coordinates are present.
    fn partial_feasible(&self, t: i64, entries: &[i64]) -> bool {
        if entries.iter().any(|&v| v < 0) {
            return false;
        }
        let mut sorted = entries.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let limit = (self.rank() - 1).min(sorted.len());
        let mut prefix = 0;
        for (k, v) in sorted.iter().take(limit).enumerate() {
            prefix += v;
            if prefix > t * self.top_sum(k + 1) {
                return false;
            }
        }
        sorted.iter().sum::<i64>() <= t * self.total_bound()
    }

    /// Literal check against every inequality returned by [`facets`](Self::facets).
    pub fn contains_by_facets(&self, t: u64, x: &[i64]) -> bool {
        self.facets().iter().all(|f| f.holds(x, t as i64))
    }

    fn candidate_count(&self, t: u64) -> u128 {
        let side = u128::from(t * self.n + 1);
        side.checked_pow(self.m as u32).unwrap_or(u128::MAX)
    }

    /// Number of integer points in `t * P(m, n)` by enumeration of the box
    /// `{0..tn}^m` with pruning on partial assignments.
    pub fn count_lattice_points(&self, t: u64, budget: u128) -> Result<u128> {
        if t == 0 {
            return Err(Error::NonPositiveDilation(t));
        }
        let candidates = self.candidate_count(t);
        if candidates > budget {
            return Err(Error::LatticeBudget { candidates, budget });
        }
        let max = (t * self.n) as i64;
        let mut x = Vec::with_capacity(self.m);
        Ok(self.count_from(t as i64, max, &mut x))
    }

    fn count_from(&self, t: i64, max: i64, x: &mut Vec<i64>) -> u128 {
        if x.len() == self.m {
            return 1;
        }
        let mut total = 0;
        for v in 0..=max {
            x.push(v);
            let ok = self.partial_feasible(t, x);
            if ok {
                total += self.count_from(t, max, x);
            }
            x.pop();
            // larger values only tighten every constraint
            if !ok {
                break;
            }
        }
        total
    }

    /// Lift of `x in P(m, n)` onto the hyperplane `sum y = total_bound()`.
    pub fn lift(&self, x: &[i64]) -> Result<LatticePoint> {
        self.lift_dilated(1, x)
    }

    /// Lift of `x in t * P(m, n)` onto `sum y = t * total_bound()`.
    pub fn lift_dilated(&self, t: u64, x: &[i64]) -> Result<LatticePoint> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                actual: x.len(),
            });
        }
        if !self.contains(t, x) {
            return Err(Error::PointOutsidePolytope(x.to_vec()));
        }
        let mut y = x.to_vec();
        y.push(t as i64 * self.total_bound() - x.iter().sum::<i64>());
        Ok(LatticePoint(y))
    }

    fn parking_coefficient(&self) -> Result<u64> {
        if !self.in_parking_range() {
            return Err(Error::BelowParkingRange {
                m: self.m,
                n: self.n,
            });
        }
        Ok(self.n + 1 - self.m as u64)
    }

    /// `(n-m+1) * conv{0, e_i}` for each `i`, then `conv{0, e_i, e_j}` for
    /// each `i < j`.
    pub fn minkowski_summands(&self) -> Result<Vec<Summand>> {
        let seg = self.parking_coefficient()?;
        let m = self.m;
        let unit = |i: usize| {
            let mut v = vec![0; m];
            v[i] = 1;
            LatticePoint(v)
        };
        let origin = LatticePoint(vec![0; m]);
        let mut out: Vec<Summand> = (0..m)
            .map(|i| Summand {
                coefficient: seg,
                vertices: vec![origin.clone(), unit(i)],
            })
            .collect();
        for i in 0..m {
            for j in i + 1..m {
                out.push(Summand {
                    coefficient: 1,
                    vertices: vec![origin.clone(), unit(i), unit(j)],
                });
            }
        }
        Ok(out)
    }

    /// Supports of the lifted decomposition in `R^(m+1)` as bitmasks over
    /// coordinates `0..=m`: `{i, m+1}` with weight `n-m+1` and
    /// `{i, j, m+1}` with weight 1.
    pub fn lifted_summand_supports(&self) -> Result<Vec<(u64, u32)>> {
        let seg = self.parking_coefficient()?;
        let apex = 1u32 << self.m;
        let mut out: Vec<(u64, u32)> = (0..self.m).map(|i| (seg, (1 << i) | apex)).collect();
        for i in 0..self.m {
            for j in i + 1..self.m {
                out.push((1, (1 << i) | (1 << j) | apex));
            }
        }
        Ok(out)
    }

    /// Membership of `y in R^(m+1)` in the `t`-th dilate of the lifted
    /// polytope, decided from its decomposition as a sum of dilated
    /// coordinate simplices: `sum y = sum of weights` and, for every subset
    /// `J`, `sum_{i in J} y_i >= sum of weights of simplices inside J`.
    pub fn contains_lifted(&self, t: u64, y: &[i64]) -> Result<bool> {
        if y.len() != self.m + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.m + 1,
                actual: y.len(),
            });
        }
        let supports = self.lifted_summand_supports()?;
        let t = t as i64;
        let total: i64 = supports.iter().map(|&(w, _)| w as i64).sum::<i64>() * t;
        if y.iter().sum::<i64>() != total {
            return Ok(false);
        }
        let full = (1u32 << (self.m + 1)) - 1;
        for j in 1..full {
            let lhs: i64 = (0..=self.m)
                .filter(|&i| j >> i & 1 == 1)
                .map(|i| y[i])
                .sum();
            let rhs: i64 = supports
                .iter()
                .filter(|&&(_, s)| s & !j == 0)
                .map(|&(w, _)| w as i64)
                .sum::<i64>()
                * t;
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Integer points of the `t`-th lifted dilate, enumerated over its
    /// hyperplane using only [`contains_lifted`](Self::contains_lifted).
    pub fn count_lifted_points(&self, t: u64, budget: u128) -> Result<u128> {
        let supports = self.lifted_summand_supports()?;
        let total: i64 = supports.iter().map(|&(w, _)| w as i64).sum::<i64>() * t as i64;
        let side = u128::from(total as u64 + 1);
        let candidates = side.checked_pow(self.m as u32).unwrap_or(u128::MAX);
        if candidates > budget {
            return Err(Error::LatticeBudget { candidates, budget });
        }
        let mut count = 0;
        let mut y = vec![0i64; self.m + 1];
        loop {
            let partial: i64 = y[..self.m].iter().sum();
            if partial <= total {
                y[self.m] = total - partial;
                if self.contains_lifted(t, &y)? {
                    count += 1;
                }
            }
            // odometer over the first m coordinates
            let mut i = 0;
            loop {
                if i == self.m {
                    return Ok(count);
                }
                y[i] += 1;
                if y[i] <= total {
                    break;
                }
                y[i] = 0;
                i += 1;
            }
        }
    }

    /// `max <d, v>` over the vertices.
    pub fn support_value(&self, direction: &[i64]) -> Result<i64> {
        if direction.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                actual: direction.len(),
            });
        }
        Ok(self
            .vertices()
            .iter()
            .map(|v| dot(v, direction))
            .max()
            .expect("polytope has at least one vertex"))
    }
}

/// Support function of a Minkowski sum: the weighted sum of the support
/// values of its summands.
pub fn summands_support_value(summands: &[Summand], direction: &[i64]) -> i64 {
    summands
        .iter()
        .map(|s| {
            let best = s
                .vertices
                .iter()
                .map(|v| dot(v, direction))
                .max()
                .unwrap_or(0);
            s.coefficient as i64 * best
        })
        .sum()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(m: usize, n: u64) -> PartialPermutohedron {
        PartialPermutohedron::new(m, n).unwrap()
    }

    fn pts(v: &[&[i64]]) -> Vec<LatticePoint> {
        let mut out: Vec<_> = v.iter().map(|x| LatticePoint(x.to_vec())).collect();
        out.sort();
        out
    }

    fn falling(m: u64, i: u64) -> u64 {
        (0..i).map(|k| m - k).product()
    }

    #[test]
    fn rejects_zero_parameters() {
        assert!(PartialPermutohedron::new(0, 3).is_err());
        assert!(PartialPermutohedron::new(3, 0).is_err());
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(p(1, 1).vertices(), pts(&[&[0], &[1]]));
        assert_eq!(
            p(2, 2).vertices(),
            pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 1], &[1, 2]])
        );
        assert_eq!(p(2, 1).vertices(), pts(&[&[0, 0], &[1, 0], &[0, 1]]));
    }

    #[test]
    fn vertex_counts() {
        for m in 1..=5usize {
            for n in 1..=5u64 {
                let expected: u64 = (0..=(m as u64).min(n)).map(|i| falling(m as u64, i)).sum();
                assert_eq!(p(m, n).vertices().len() as u64, expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn facet_examples() {
        let f = p(2, 1).facets();
        let text: Vec<String> = f.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["x1 >= 0", "x2 >= 0", "x1 + x2 <= 1"]);
        let text: Vec<String> = p(2, 2).facets().iter().map(ToString::to_string).collect();
        assert_eq!(
            text,
            ["x1 >= 0", "x2 >= 0", "x1 <= 2", "x2 <= 2", "x1 + x2 <= 3"]
        );
        assert_eq!(p(3, 3).facets().len(), 10);
    }

    #[test]
    fn membership_examples() {
        assert!(!p(2, 1).contains(1, &[1, 1]));
        assert!(p(2, 2).contains(1, &[2, 1]));
        assert!(p(3, 2).contains(2, &[4, 2, 0]));
        assert!(!p(3, 2).contains(2, &[5, 1, 0]));
    }

    #[test]
    fn count_examples() {
        assert_eq!(
            p(2, 1).count_lattice_points(1, DEFAULT_LATTICE_BUDGET),
            Ok(3)
        );
        assert_eq!(
            p(2, 2).count_lattice_points(1, DEFAULT_LATTICE_BUDGET),
            Ok(8)
        );
        assert_eq!(
            p(1, 3).count_lattice_points(2, DEFAULT_LATTICE_BUDGET),
            Ok(7)
        );
    }

    #[test]
    fn count_respects_budget() {
        let err = p(4, 4).count_lattice_points(3, 1000).unwrap_err();
        assert_eq!(
            err,
            Error::LatticeBudget {
                candidates: 13u128.pow(4),
                budget: 1000
            }
        );
        assert_eq!(
            p(2, 2).count_lattice_points(0, 1000),
            Err(Error::NonPositiveDilation(0))
        );
    }

    #[test]
    fn lift_examples() {
        assert_eq!(p(2, 2).lift(&[2, 1]).unwrap().0, vec![2, 1, 0]);
        assert_eq!(p(2, 2).lift(&[0, 0]).unwrap().0, vec![0, 0, 3]);
        assert_eq!(p(3, 2).lift(&[0, 0, 0]).unwrap().0, vec![0, 0, 0, 3]);
        assert!(matches!(
            p(2, 1).lift(&[1, 1]),
            Err(Error::PointOutsidePolytope(_))
        ));
    }

    #[test]
    fn summand_examples() {
        let s = p(2, 1).minkowski_summands().unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(
            s.iter().map(|x| x.coefficient).collect::<Vec<_>>(),
            [0, 0, 1]
        );
        let mut simplex = s[2].vertices.clone();
        simplex.sort();
        assert_eq!(simplex, pts(&[&[0, 0], &[1, 0], &[0, 1]]));
        let s = p(2, 3).minkowski_summands().unwrap();
        assert_eq!(
            s.iter().map(|x| x.coefficient).collect::<Vec<_>>(),
            [2, 2, 1]
        );
        let s = p(3, 2).minkowski_summands().unwrap();
        assert_eq!(
            s.iter().map(|x| x.coefficient).collect::<Vec<_>>(),
            [0, 0, 0, 1, 1, 1]
        );
        assert_eq!(
            p(4, 2).minkowski_summands(),
            Err(Error::BelowParkingRange { m: 4, n: 2 })
        );
    }

    #[test]
    fn support_examples() {
        let q = p(2, 2);
        assert_eq!(q.support_value(&[1, 1]), Ok(3));
        assert_eq!(q.support_value(&[1, 0]), Ok(2));
        assert_eq!(q.support_value(&[-1, -1]), Ok(0));
    }

    #[test]
    fn vertices_satisfy_facets_and_are_simple() {
        for m in 1..=4usize {
            for n in 1..=4u64 {
                let q = p(m, n);
                let facets = q.facets();
                for v in q.vertices() {
                    assert!(facets.iter().all(|f| f.holds(&v, 1)), "m={m} n={n} v={v}");
                    let tight = facets.iter().filter(|f| f.is_tight(&v, 1)).count();
                    assert_eq!(tight, m, "simplicity at m={m} n={n} v={v}");
                }
            }
        }
    }

    #[test]
    fn vertex_shaped_points_are_vertices() {
        for m in 1..=4usize {
            for n in 1..=4u64 {
                let q = p(m, n);
                let vertices: BTreeSet<_> = q.vertices().into_iter().collect();
                let side = n as i64 + 1;
                for code in 0..side.pow(m as u32) {
                    let x: Vec<i64> = (0..m).map(|i| code / side.pow(i as u32) % side).collect();
                    let mut nz: Vec<i64> = x.iter().copied().filter(|&v| v != 0).collect();
                    nz.sort_unstable_by(|a, b| b.cmp(a));
                    let top_run = nz
                        .iter()
                        .enumerate()
                        .all(|(k, &v)| v == n as i64 - k as i64);
                    if top_run && q.contains_by_facets(1, &x) {
                        assert!(vertices.contains(&LatticePoint(x.clone())), "{x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sorted_prefix_membership_matches_subset_inequalities() {
        for m in 1..=4usize {
            for n in 1..=4u64 {
                let q = p(m, n);
                for t in 1..=2u64 {
                    let side = (t * n) as i64 + 2;
                    for code in 0..side.pow(m as u32) {
                        let x: Vec<i64> =
                            (0..m).map(|i| code / side.pow(i as u32) % side).collect();
                        assert_eq!(q.contains(t, &x), q.contains_by_facets(t, &x), "{x:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn lifted_points_lie_in_decomposition() {
        for m in 1..=3usize {
            for n in (m as u64).saturating_sub(1).max(1)..=4 {
                let q = p(m, n);
                for v in q.vertices() {
                    let y = q.lift(&v).unwrap();
                    assert_eq!(y.iter().sum::<i64>(), q.total_bound());
                    assert!(q.contains_lifted(1, &y).unwrap(), "m={m} n={n} y={y}");
                }
            }
        }
    }

    #[test]
    fn lift_preserves_counts() {
        for m in 1..=3usize {
            for n in (m as u64).saturating_sub(1).max(1)..=m as u64 + 2 {
                let q = p(m, n);
                for t in 1..=2 {
                    assert_eq!(
                        q.count_lattice_points(t, DEFAULT_LATTICE_BUDGET).unwrap(),
                        q.count_lifted_points(t, DEFAULT_LATTICE_BUDGET).unwrap(),
                        "m={m} n={n} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn supports_add_over_summands() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in 1..=3usize {
            for n in (m as u64).saturating_sub(1).max(1)..=m as u64 + 2 {
                let q = p(m, n);
                let summands = q.minkowski_summands().unwrap();
                for _ in 0..200 {
                    let d: Vec<i64> = (0..m).map(|_| rng.gen_range(-5..=5)).collect();
                    assert_eq!(
                        q.support_value(&d).unwrap(),
                        summands_support_value(&summands, &d),
                        "m={m} n={n} d={d:?}"
                    );
                }
            }
        }
    }
}
