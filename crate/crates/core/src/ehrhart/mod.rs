//! Ehrhart polynomials of `P(m, n)` for `n >= m - 1`, plus the volume and
//! face-count polynomials.
//!
//! Every engine returns an exact [`RationalPoly`] in `t`; for a given
//! `(m, n)` all of them must agree coefficient by coefficient.

mod closed;
mod egf;
mod fpoly;
mod recurrence;
mod sums;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::RationalPoly;

pub(crate) use closed::ehrhart_closed_with;
pub use closed::{ehrhart_closed, volume_closed};
pub use egf::{
    coefficient_transfer_check, ehrhart_egf, ehrhart_egf_via_tree, structure_egf_counts,
    tree_function,
};
pub use fpoly::{f_polynomial, f_polynomial_stable};
pub use recurrence::ehrhart_recurrence;
pub use sums::{ehrhart_graphsum, ehrhart_postnikov};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Closed,
    Postnikov,
    GraphSum,
    Egf,
    /// The generating function before the coefficient transfer, composed
    /// with the tree function.
    EgfTree,
    Recurrence,
}

impl Method {
    pub const ALL: [Method; 6] = [
        Method::Closed,
        Method::Postnikov,
        Method::GraphSum,
        Method::Egf,
        Method::EgfTree,
        Method::Recurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Postnikov => "postnikov",
            Method::GraphSum => "graphsum",
            Method::Egf => "egf",
            Method::EgfTree => "egf-tree",
            Method::Recurrence => "recurrence",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method '{s}'"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    pub m: usize,
    pub n: u64,
    pub method: Method,
    pub polynomial: RationalPoly,
}

pub fn ehrhart(m: usize, n: u64, method: Method) -> Result<EhrhartResult> {
    let polynomial = match method {
        Method::Closed => ehrhart_closed(m, n)?,
        Method::Postnikov => ehrhart_postnikov(m, n)?,
        Method::GraphSum => ehrhart_graphsum(m, n)?,
        Method::Egf => ehrhart_egf(m, n)?,
        Method::EgfTree => ehrhart_egf_via_tree(m, n)?,
        Method::Recurrence => ehrhart_recurrence(m, n)?,
    };
    Ok(EhrhartResult {
        m,
        n,
        method,
        polynomial,
    })
}

pub(crate) fn check_parking_range(m: usize, n: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::NonPositiveParameters { m, n });
    }
    if n + 1 < m as u64 {
        return Err(Error::BelowParkingRange { m, n });
    }
    Ok(())
}
