//! Exact Ehrhart polynomials of partial permutohedra `P(m, n)`.
//!
//! `P(m, n)` is the convex hull of the vectors in `{0..n}^m` whose nonzero
//! entries are distinct. For `n >= m - 1` its Ehrhart polynomial is computed
//! here by five independent routes (closed double sum, Postnikov-style sum
//! over Hall sequences, weighted sum over multigraphs, exponential generating
//! function extraction, and a three-term recurrence), all in exact rational
//! arithmetic, alongside the geometry needed to check them by brute force.

pub mod combinat;
pub mod ehrhart;
mod error;
pub mod exactmath;
pub mod polytope;
pub mod verify;

pub use error::{Error, Result};
