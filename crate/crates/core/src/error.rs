use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series exp requires a zero constant term")]
    ExpConstantTerm,
    #[error("series log requires constant term 1")]
    LogConstantTerm,
    #[error("series sqrt requires constant term 1")]
    SqrtConstantTerm,
    #[error("series composition requires the inner series to have a zero constant term")]
    ComposeConstantTerm,

    #[error("double factorial argument {0} is not of the form 2q-3 with q >= 0")]
    DoubleFactorialArgument(i64),

    #[error("m and n must be positive (got m={m}, n={n})")]
    NonPositiveParameters { m: usize, n: u64 },
    #[error("dilation factor must be positive (got t={0})")]
    NonPositiveDilation(u64),
    #[error("formula requires n >= m-1 (got m={m}, n={n})")]
    BelowParkingRange { m: usize, n: u64 },
    #[error("stable f-polynomial requires n >= m (got m={m}, n={n})")]
    BelowStableRange { m: usize, n: u64 },
    #[error("expected a vector of length {expected}, got length {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("point {0:?} does not lie in the polytope")]
    PointOutsidePolytope(Vec<i64>),

    #[error("lattice enumeration would visit {candidates} candidate points, above the budget of {budget}")]
    LatticeBudget { candidates: u128, budget: u128 },
    #[error("graph enumeration for m={m} exceeds the configured bound {bound}")]
    EnumerationBound { m: usize, bound: usize },

    #[error("sequence does not satisfy the Hall condition")]
    HallViolation,
    #[error("graph has a component with more than one cycle")]
    ExcessCycles,

    #[error("extracted coefficient retains a negative power of t (min exponent {0})")]
    NegativePowerSurvived(i64),
}

pub type Result<T> = std::result::Result<T, Error>;
