//! Plane hamiltonian graphs: face tracing, the split along a Hamilton cycle,
//! dual trees of the two sides, and the cycle finders that run the subtree
//! search on those dual trees.

mod cycles;
mod dual;
mod faces;
mod format;
mod generate;
mod half;
mod split;

pub use cycles::{
    check_cycle_hypotheses, find_cycle_near, mohr_cycle, mohr_params, validate_cycle, CycleOutcome,
    CycleResult, HypothesisReport,
};
pub use dual::{build_dual_tree, subtree_to_cycle, DualTree};
pub use faces::{trace_faces, Dart, Faces};
pub use format::parse_graph;
pub use generate::{
    dense_square_cycle, embed_hamiltonian, malkevitch, medial_prism, octahedron, random_plane_hamiltonian,
    square_cycle,
};
pub use half::{find_half_cycle_3conn, is_three_connected, HalfBranch, HalfCycle};
pub use split::{split_by_hamilton, Side, Split};

use thiserror::Error;

use crate::rotation::{self, RotationDefect};
use crate::tree::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlanarError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("graph must have at least three vertices, got {0}")]
    TooSmall(usize),
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once or lists itself")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("adjacency is not symmetric: {vertex} lists {neighbor} but not vice versa")]
    AsymmetricAdjacency { vertex: usize, neighbor: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rotation system is not a plane embedding: n - m + f = {euler} instead of 2")]
    NotPlane { euler: i64 },
    #[error("chords cannot be split into two non-crossing sides of the Hamilton cycle")]
    CrossingChords,
    #[error("not a Hamilton cycle: {0}")]
    NotHamiltonian(String),
    #[error("the Hamilton cycle does not separate the chords consistently: {0}")]
    InconsistentSplit(String),
    #[error("target needs k >= 3 and g >= 1 (k = {k}, g = {g})")]
    InvalidTarget { k: u64, g: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unexpected structure: {0}")]
    UnexpectedStructure(String),
    #[error("generator parameters out of range: {0}")]
    BadParams(String),
}

impl From<RotationDefect> for PlanarError {
    fn from(d: RotationDefect) -> Self {
        match d {
            RotationDefect::OutOfRange { vertex, neighbor } => PlanarError::NeighborOutOfRange { vertex, neighbor },
            RotationDefect::Loop { vertex } => PlanarError::RepeatedNeighbor { vertex, neighbor: vertex },
            RotationDefect::Repeated { vertex, neighbor } => PlanarError::RepeatedNeighbor { vertex, neighbor },
            RotationDefect::Asymmetric { vertex, neighbor } => PlanarError::AsymmetricAdjacency { vertex, neighbor },
        }
    }
}

/// A connected simple graph with a rotation system that traces to a plane embedding.
///
/// `adjacency[v]` is the rotation at `v`. Darts `(v, i)` are numbered
/// `offset[v] + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    adjacency: Vec<Vec<usize>>,
    offset: Vec<usize>,
    twin: Vec<usize>,
    face_count: usize,
}

impl PlaneGraph {
    /// Validates simplicity, symmetry, connectivity and Euler's formula.
    pub fn new(adjacency: Vec<Vec<usize>>) -> Result<Self, PlanarError> {
        let n = adjacency.len();
        if n < 3 {
            return Err(PlanarError::TooSmall(n));
        }
        rotation::check_simple_symmetric(&adjacency)?;
        if !rotation::is_connected(&adjacency) {
            return Err(PlanarError::Disconnected);
        }
        let mut offset = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for nbrs in &adjacency {
            offset.push(acc);
            acc += nbrs.len();
        }
        offset.push(acc);
        let slots = rotation::twin_slots(&adjacency);
        let mut twin = vec![0; acc];
        for v in 0..n {
            for (i, &u) in adjacency[v].iter().enumerate() {
                twin[offset[v] + i] = offset[u] + slots[v][i];
            }
        }
        let mut g = Self { adjacency, offset, twin, face_count: 0 };
        g.face_count = faces::count_faces(&g);
        let euler = n as i64 - g.edge_count() as i64 + g.face_count as i64;
        if euler != 2 {
            return Err(PlanarError::NotPlane { euler });
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.twin.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.len() && self.adjacency[u].contains(&v)
    }

    /// Each undirected edge once, as `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.len())
            .flat_map(|v| self.adjacency[v].iter().filter(move |&&u| v < u).map(move |&u| (v, u)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn dart(&self, v: usize, slot: usize) -> Dart {
        self.offset[v] + slot
    }

    pub fn tail(&self, d: Dart) -> usize {
        // offset is sorted, so the tail is the last vertex whose offset is <= d.
        self.offset.partition_point(|&o| o <= d) - 1
    }

    pub fn slot(&self, d: Dart) -> usize {
        d - self.offset[self.tail(d)]
    }

    pub fn head(&self, d: Dart) -> usize {
        let v = self.tail(d);
        self.adjacency[v][d - self.offset[v]]
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    /// Next dart on the same face: after arriving at `v` along `u -> v`,
    /// leave along the rotation entry following `u` at `v`.
    pub fn face_next(&self, d: Dart) -> Dart {
        let t = self.twin[d];
        let v = self.tail(t);
        let j = t - self.offset[v];
        self.offset[v] + (j + 1) % self.adjacency[v].len()
    }

    /// Serializes in the graph file format, with an optional `hamilton:` line.
    pub fn to_text(&self, ham: Option<&HamiltonCycle>) -> String {
        format::write_graph(self, ham)
    }
}

/// A cyclic order visiting every vertex once along edges of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonCycle {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl HamiltonCycle {
    pub fn new(graph: &PlaneGraph, order: Vec<usize>) -> Result<Self, PlanarError> {
        let n = graph.len();
        if order.len() != n {
            return Err(PlanarError::NotHamiltonian(format!("{} vertices listed, graph has {n}", order.len())));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(PlanarError::NotHamiltonian(format!("vertex {v} out of range")));
            }
            if position[v] != usize::MAX {
                return Err(PlanarError::NotHamiltonian(format!("vertex {v} repeated")));
            }
            position[v] = i;
        }
        for i in 0..n {
            let (a, b) = (order[i], order[(i + 1) % n]);
            if !graph.has_edge(a, b) {
                return Err(PlanarError::NotHamiltonian(format!("{a} and {b} are not adjacent")));
            }
        }
        Ok(Self { order, position })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn next(&self, v: usize) -> usize {
        self.order[(self.position[v] + 1) % self.order.len()]
    }

    pub fn prev(&self, v: usize) -> usize {
        let n = self.order.len();
        self.order[(self.position[v] + n - 1) % n]
    }

    /// Whether `{u, v}` is an edge of the cycle.
    pub fn is_cycle_edge(&self, u: usize, v: usize) -> bool {
        self.next(u) == v || self.prev(u) == v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> PlaneGraph {
        PlaneGraph::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn triangle_basics() {
        let g = triangle();
        assert_eq!((g.len(), g.edge_count(), g.face_count()), (3, 3, 2));
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        for d in 0..g.dart_count() {
            assert_eq!(g.twin(g.twin(d)), d);
            assert_eq!(g.head(d), g.tail(g.twin(d)));
            assert_eq!(g.dart(g.tail(d), g.slot(d)), d);
        }
    }

    #[test]
    fn rejects_non_plane_rotation() {
        // K4 with a rotation that traces to too few faces.
        let adj = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        assert!(matches!(PlaneGraph::new(adj), Err(PlanarError::NotPlane { .. })));
        let adj = vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]];
        assert_eq!(PlaneGraph::new(adj).unwrap().face_count(), 4);
    }

    #[test]
    fn rejects_malformed_adjacency() {
        assert_eq!(PlaneGraph::new(vec![vec![1], vec![0]]), Err(PlanarError::TooSmall(2)));
        assert!(matches!(
            PlaneGraph::new(vec![vec![1], vec![0], vec![0]]),
            Err(PlanarError::AsymmetricAdjacency { .. })
        ));
        assert_eq!(
            PlaneGraph::new(vec![vec![1], vec![0], vec![3], vec![2]]),
            Err(PlanarError::Disconnected)
        );
    }

    #[test]
    fn hamilton_validation() {
        let g = triangle();
        assert!(HamiltonCycle::new(&g, vec![0, 1, 2]).is_ok());
        assert!(HamiltonCycle::new(&g, vec![0, 1]).is_err());
        assert!(HamiltonCycle::new(&g, vec![0, 1, 1]).is_err());
        let sq = PlaneGraph::new(vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]]).unwrap();
        assert!(HamiltonCycle::new(&sq, vec![0, 2, 1, 3]).is_err());
        let h = HamiltonCycle::new(&sq, vec![0, 1, 2, 3]).unwrap();
        assert_eq!((h.next(3), h.prev(0)), (0, 3));
        assert!(h.is_cycle_edge(0, 3) && !h.is_cycle_edge(0, 2));
    }
}
