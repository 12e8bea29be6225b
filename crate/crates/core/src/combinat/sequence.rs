use std::fmt;

use super::graph::LabeledMultigraph;
use super::{pair_count, pair_index, pairs, EdgeSet};
use crate::error::{Error, Result};

/// Multiplicities `a_{i}` (loops) and `a_{i,j}` (pairs, lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMultiplicitySeq {
    m: usize,
    loops: Vec<u32>,
    pairs: Vec<u32>,
}

impl EdgeMultiplicitySeq {
    /// # Panics
    /// If the vector lengths do not match `m` and `m(m-1)/2`.
    pub fn new(m: usize, loops: Vec<u32>, pairs: Vec<u32>) -> Self {
        assert_eq!(loops.len(), m, "need one loop multiplicity per vertex");
        assert_eq!(pairs.len(), pair_count(m), "need one multiplicity per pair");
        EdgeMultiplicitySeq { m, loops, pairs }
    }

    pub fn zeros(m: usize) -> Self {
        Self::new(m, vec![0; m], vec![0; pair_count(m)])
    }

    /// Parses the flat layout `(a_{1}, .., a_{m}, a_{12}, a_{13}, .., a_{m-1,m})`.
    pub fn from_flat(m: usize, flat: &[u32]) -> Self {
        let (l, p) = flat.split_at(m);
        Self::new(m, l.to_vec(), p.to_vec())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn pairs(&self) -> &[u32] {
        &self.pairs
    }

    pub fn loop_mult(&self, i: usize) -> u32 {
        self.loops[i]
    }

    pub fn pair_mult(&self, i: usize, j: usize) -> u32 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.pairs[pair_index(self.m, i, j)]
    }

    pub fn total(&self) -> u32 {
        self.loops.iter().chain(&self.pairs).sum()
    }

    /// The family in which each set `S` appears `a_S` times.
    pub fn family(&self) -> Vec<EdgeSet> {
        let mut out = Vec::new();
        for (i, &a) in self.loops.iter().enumerate() {
            out.extend(std::iter::repeat_n(EdgeSet::Loop(i), a as usize));
        }
        for ((i, j), &a) in pairs(self.m).zip(&self.pairs) {
            out.extend(std::iter::repeat_n(EdgeSet::Pair(i, j), a as usize));
        }
        out
    }

    pub fn flat(&self) -> Vec<u32> {
        self.loops.iter().chain(&self.pairs).copied().collect()
    }
}

impl fmt::Display for EdgeMultiplicitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.flat().iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every sequence with loop multiplicities in `0..=max_loop` and pair
/// multiplicities in `0..=max_pair`, admissible or not.
pub fn sequences_in_box(
    m: usize,
    max_loop: u32,
    max_pair: u32,
) -> impl Iterator<Item = EdgeMultiplicitySeq> {
    let bounds: Vec<u64> = (0..m + pair_count(m))
        .map(|k| u64::from(if k < m { max_loop } else { max_pair }) + 1)
        .collect();
    let total: u64 = bounds.iter().product();
    (0..total).map(move |code| {
        let mut c = code;
        let flat: Vec<u32> = bounds
            .iter()
            .map(|&b| {
                let v = c % b;
                c /= b;
                v as u32
            })
            .collect();
        EdgeMultiplicitySeq::from_flat(m, &flat)
    })
}

/// A system of distinct representatives for `family` over vertices
/// `0..m`, as the chosen vertex of each member, or `None` if none exists.
///
/// Simple augmenting paths (Kuhn) between family members and vertices.
pub fn distinct_representatives(m: usize, family: &[EdgeSet]) -> Option<Vec<usize>> {
    if family.len() > m {
        return None;
    }
    fn augment(
        slot: usize,
        family: &[EdgeSet],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        let (a, b) = family[slot].endpoints();
        let candidates: &[usize] = if a == b { &[a] } else { &[a, b] };
        for &v in candidates {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|other| augment(other, family, owner, seen)) {
                owner[v] = Some(slot);
                return true;
            }
        }
        false
    }

    let mut owner: Vec<Option<usize>> = vec![None; m];
    for slot in 0..family.len() {
        let mut seen = vec![false; m];
        if !augment(slot, family, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut rep = vec![usize::MAX; family.len()];
    for (v, o) in owner.iter().enumerate() {
        if let Some(slot) = o {
            rep[*slot] = v;
        }
    }
    Some(rep)
}

/// Whether the family of `a` has a system of distinct representatives.
/// The empty family does.
pub fn satisfies_hall(a: &EdgeMultiplicitySeq) -> bool {
    distinct_representatives(a.m, &a.family()).is_some()
}

/// Reads the multiplicities back off a graph with at most one cycle per
/// component.
pub fn gamma_inverse(g: &LabeledMultigraph) -> Result<EdgeMultiplicitySeq> {
    if !super::component_cycle_check(g) {
        return Err(Error::ExcessCycles);
    }
    Ok(EdgeMultiplicitySeq::new(
        g.m(),
        g.loops().to_vec(),
        g.pair_mults().to_vec(),
    ))
}
