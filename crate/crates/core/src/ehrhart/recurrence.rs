use super::{check_parking_range, ehrhart_closed};
use crate::error::Result;
use crate::exactmath::{rat, rat_frac, RationalPoly};

/// Three-term recurrence in `m` at fixed `n`:
///
/// ```text
/// E(k) = (kt + nt - t + 1) E(k-1)
///      - (k-1)(nt + t/2 + 3/2) t E(k-2)
///      + (k-1)(k-2) t^2 E(k-3) / 2
/// ```
///
/// seeded with the closed form at `k = 1, 2, 3`.
pub fn ehrhart_recurrence(m: usize, n: u64) -> Result<RationalPoly> {
    check_parking_range(m, n)?;
    if m <= 3 {
        return ehrhart_closed(m, n);
    }
    let mut seq = vec![
        ehrhart_closed(1, n)?,
        ehrhart_closed(2, n)?,
        ehrhart_closed(3, n)?,
    ];
    let ni = n as i64;
    let t = RationalPoly::t();
    let t_squared = RationalPoly::monomial(rat(1), 2);
    for k in 4..=m as i64 {
        let a = RationalPoly::from_integers(&[1, k + ni - 1]);
        // (k-1)(nt + t/2 + 3/2) t
        let b = &RationalPoly::new(vec![rat_frac(3, 2), rat(ni) + rat_frac(1, 2)])
            .scale(&rat(k - 1))
            * &t;
        let c = t_squared.scale(&rat_frac((k - 1) * (k - 2), 2));
        let len = seq.len();
        let next = &(&(&a * &seq[len - 1]) - &(&b * &seq[len - 2])) + &(&c * &seq[len - 3]);
        seq.push(next);
    }
    Ok(seq.pop().expect("sequence is nonempty"))
}
