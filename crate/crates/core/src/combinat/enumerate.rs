//! Depth-first enumeration of labelled multigraphs in which every component
//! has at most one cycle.

use std::collections::BTreeMap;

use super::graph::{CycleForest, GraphStats, LabeledMultigraph};
use super::pairs;
use crate::error::{Error, Result};

/// Largest vertex count enumerated unless a caller raises the bound.
pub const DEFAULT_MAX_VERTICES: usize = 7;

#[derive(Clone, Copy, Debug)]
enum Slot {
    Loop(usize),
    Pair(usize, usize),
}

impl Slot {
    fn max_mult(self) -> u32 {
        match self {
            Slot::Loop(_) => 1,
            Slot::Pair(..) => 2,
        }
    }
}

/// Lazy iterator over the graphs on `m` labelled vertices with at most one
/// cycle per component. Loop multiplicities range over `{0, 1}` and pair
/// multiplicities over `{0, 1, 2}`; a branch is dropped as soon as a
/// component acquires more edges than vertices.
pub struct GraphEnumerator {
    m: usize,
    slots: Vec<Slot>,
    values: Vec<u32>,
    next_value: Vec<u32>,
    forests: Vec<CycleForest>,
    depth: usize,
    done: bool,
}

impl GraphEnumerator {
    pub fn with_bound(m: usize, bound: usize) -> Result<Self> {
        if m == 0 || m > bound {
            return Err(Error::EnumerationBound { m, bound });
        }
        let mut slots: Vec<Slot> = (0..m).map(Slot::Loop).collect();
        slots.extend(pairs(m).map(|(i, j)| Slot::Pair(i, j)));
        let len = slots.len();
        let mut forests = vec![CycleForest::new(m); 1];
        forests.reserve(len);
        Ok(GraphEnumerator {
            m,
            slots,
            values: vec![0; len],
            next_value: vec![0; len + 1],
            forests,
            depth: 0,
            done: false,
        })
    }

    fn current(&self) -> LabeledMultigraph {
        let (loops, pair_mult) = self.values.split_at(self.m);
        LabeledMultigraph::new(self.m, loops.to_vec(), pair_mult.to_vec())
    }
}

impl Iterator for GraphEnumerator {
    type Item = LabeledMultigraph;

    fn next(&mut self) -> Option<LabeledMultigraph> {
        loop {
            if self.done {
                return None;
            }
            let d = self.depth;
            if d == self.slots.len() {
                let g = self.current();
                self.depth -= 1;
                return Some(g);
            }
            let v = self.next_value[d];
            let slot = self.slots[d];
            if v > slot.max_mult() {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                continue;
            }
            self.next_value[d] = v + 1;
            let mut forest = self.forests[d].clone();
            let (a, b) = match slot {
                Slot::Loop(i) => (i, i),
                Slot::Pair(i, j) => (i, j),
            };
            if (0..v).all(|_| forest.add_edge(a, b)) {
                self.values[d] = v;
                self.forests.truncate(d + 1);
                self.forests.push(forest);
                self.next_value[d + 1] = 0;
                self.depth = d + 1;
            } else {
                // a higher multiplicity on the same slot only adds cycles
                self.next_value[d] = slot.max_mult() + 1;
            }
        }
    }
}

/// Enumerator with the default bound of [`DEFAULT_MAX_VERTICES`].
pub fn enumerate_graphs(m: usize) -> Result<GraphEnumerator> {
    GraphEnumerator::with_bound(m, DEFAULT_MAX_VERTICES)
}

/// Number of graphs per `(loops, single edges, edge pairs)` signature.
pub fn census(m: usize) -> Result<BTreeMap<GraphStats, u64>> {
    let mut out = BTreeMap::new();
    for g in enumerate_graphs(m)? {
        *out.entry(g.stats()).or_insert(0) += 1;
    }
    Ok(out)
}

/// Connected graphs split by shape: trees, trees with one loop, trees with
/// one doubled edge, and simple connected graphs with a single cycle of
/// length at least 3.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StructureCounts {
    pub trees: u64,
    pub looped_trees: u64,
    pub enhanced_trees: u64,
    pub quasitrees: u64,
}

pub fn structure_counts(m: usize) -> Result<StructureCounts> {
    let mut out = StructureCounts::default();
    for g in enumerate_graphs(m)? {
        if !g.is_connected() {
            continue;
        }
        let stats = g.stats();
        let edges = g.edge_count() as usize;
        if edges + 1 == m {
            out.trees += 1;
        } else if stats.n_loops == 1 {
            out.looped_trees += 1;
        } else if stats.n_pairs == 1 {
            out.enhanced_trees += 1;
        } else {
            debug_assert_eq!(edges, m);
            out.quasitrees += 1;
        }
    }
    Ok(out)
}
