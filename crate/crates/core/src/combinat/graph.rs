use std::fmt;

use super::sequence::{distinct_representatives, satisfies_hall, EdgeMultiplicitySeq};
use super::{pair_count, pair_index, pairs, EdgeSet};
use crate::error::{Error, Result};

/// Undirected multigraph on vertices `0..m` with loops and parallel edges.
/// Membership in the "at most one cycle per component" class is checked by
/// [`component_cycle_check`], not enforced by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledMultigraph {
    m: usize,
    loops: Vec<u32>,
    pair_mult: Vec<u32>,
}

/// Loops, single edges, and doubled edges of a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphStats {
    pub n_loops: u32,
    pub n_single: u32,
    pub n_pairs: u32,
}

impl LabeledMultigraph {
    /// # Panics
    /// If the vector lengths do not match `m` and `m(m-1)/2`.
    pub fn new(m: usize, loops: Vec<u32>, pair_mult: Vec<u32>) -> Self {
        assert_eq!(loops.len(), m);
        assert_eq!(pair_mult.len(), pair_count(m));
        LabeledMultigraph {
            m,
            loops,
            pair_mult,
        }
    }

    pub fn edgeless(m: usize) -> Self {
        Self::new(m, vec![0; m], vec![0; pair_count(m)])
    }

    /// Builds a graph from a list of edges given as vertex pairs; `(i, i)`
    /// is a loop.
    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::edgeless(m);
        for &(i, j) in edges {
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => g.loops[i] += 1,
                std::cmp::Ordering::Less => g.pair_mult[pair_index(m, i, j)] += 1,
                std::cmp::Ordering::Greater => g.pair_mult[pair_index(m, j, i)] += 1,
            }
        }
        g
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn pair_mults(&self) -> &[u32] {
        &self.pair_mult
    }

    pub fn edge_count(&self) -> u32 {
        self.loops.iter().chain(&self.pair_mult).sum()
    }

    /// Every edge once, loops first, then pairs lexicographically.
    pub fn edges(&self) -> Vec<EdgeSet> {
        EdgeMultiplicitySeq::new(self.m, self.loops.clone(), self.pair_mult.clone()).family()
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            n_loops: self.loops.iter().sum(),
            n_single: self.pair_mult.iter().filter(|&&k| k == 1).count() as u32,
            n_pairs: self.pair_mult.iter().filter(|&&k| k == 2).count() as u32,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = CycleForest::new(self.m);
        for ((i, j), &k) in pairs(self.m).zip(&self.pair_mult) {
            if k > 0 {
                uf.add_edge(i, j);
            }
        }
        uf.component_count() == 1
    }

    /// Orientation with every indegree at most 1, returned as the head of
    /// each edge in [`edges`](Self::edges) order; `None` if none exists.
    pub fn low_indegree_orientation(&self) -> Option<Vec<usize>> {
        distinct_representatives(self.m, &self.edges())
    }
}

impl fmt::Display for LabeledMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges()
            .iter()
            .map(|e| match e {
                EdgeSet::Loop(i) => format!("{}-{}", i + 1, i + 1),
                EdgeSet::Pair(i, j) => format!("{}-{}", i + 1, j + 1),
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Union-find keeping the vertex and edge count of every component.
#[derive(Clone, Debug)]
pub(crate) struct CycleForest {
    parent: Vec<usize>,
    vertices: Vec<u32>,
    edges: Vec<u32>,
}

impl CycleForest {
    pub(crate) fn new(m: usize) -> Self {
        CycleForest {
            parent: (0..m).collect(),
            vertices: vec![1; m],
            edges: vec![0; m],
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Adds one edge (`u == v` for a loop). Returns false once the touched
    /// component has more edges than vertices, i.e. a second cycle.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        let root = if ru == rv {
            self.edges[ru] += 1;
            ru
        } else {
            let (big, small) = if self.vertices[ru] >= self.vertices[rv] {
                (ru, rv)
            } else {
                (rv, ru)
            };
            self.parent[small] = big;
            self.vertices[big] += self.vertices[small];
            self.edges[big] += self.edges[small] + 1;
            big
        };
        self.edges[root] <= self.vertices[root]
    }

    pub(crate) fn component_count(&self) -> usize {
        self.parent
            .iter()
            .enumerate()
            .filter(|&(i, &p)| i == p)
            .count()
    }
}

/// True iff every connected component has no more edges than vertices.
pub fn component_cycle_check(g: &LabeledMultigraph) -> bool {
    let mut uf = CycleForest::new(g.m);
    g.edges().into_iter().all(|e| {
        let (u, v) = e.endpoints();
        uf.add_edge(u, v)
    })
}

/// The graph with `a_{i}` loops at `i` and `a_{i,j}` edges between `i`
/// and `j`, for `a` satisfying the Hall condition.
pub fn gamma(a: &EdgeMultiplicitySeq) -> Result<LabeledMultigraph> {
    if !satisfies_hall(a) {
        return Err(Error::HallViolation);
    }
    Ok(LabeledMultigraph::new(
        a.m(),
        a.loops().to_vec(),
        a.pairs().to_vec(),
    ))
}
