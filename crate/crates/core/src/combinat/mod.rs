//! Hall sequences, multigraphs with at most one cycle per component, and the
//! bijection between them.
//!
//! A sequence `a` assigns a multiplicity to every singleton `{i}` and pair
//! `{i, j}` of `{1..m}`. It is admissible when the family containing each
//! set `a_S` times has a system of distinct representatives. Reading `a_{i}`
//! as loops and `a_{i,j}` as parallel edges turns admissible sequences into
//! exactly the multigraphs whose components each carry at most one cycle.

mod enumerate;
mod graph;
mod sequence;

pub use enumerate::{
    census, enumerate_graphs, structure_counts, GraphEnumerator, StructureCounts,
    DEFAULT_MAX_VERTICES,
};
pub use graph::{component_cycle_check, gamma, GraphStats, LabeledMultigraph};
pub use sequence::{
    distinct_representatives, gamma_inverse, satisfies_hall, sequences_in_box, EdgeMultiplicitySeq,
};

/// An element of `E(m)`: a singleton or a pair of vertices (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeSet {
    Loop(usize),
    Pair(usize, usize),
}

impl EdgeSet {
    pub fn endpoints(self) -> (usize, usize) {
        match self {
            EdgeSet::Loop(i) => (i, i),
            EdgeSet::Pair(i, j) => (i, j),
        }
    }
}

/// Position of `{i, j}` (with `i < j`) in the lexicographic list of pairs.
pub(crate) fn pair_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < m);
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

/// Pairs `(i, j)`, `i < j < m`, in lexicographic order.
pub(crate) fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

pub(crate) fn pair_count(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}
