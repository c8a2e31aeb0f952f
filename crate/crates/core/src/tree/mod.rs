//! Vertex-weighted trees with a fixed rotation order at every vertex.

mod conditions;
mod families;
pub(crate) mod format;
mod oracle;

pub use conditions::{check_conditions, ConditionFlag, ConditionReport, SearchParams};
pub use families::{random_tree, TightFamily, TightInstance};
pub use format::{parse_tree, ParseError};
pub use oracle::oracle_subtree_weights;

use thiserror::Error;

use crate::rotation::{self, RotationDefect};
use crate::MAX_TOTAL_WEIGHT;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("tree must have at least one vertex")]
    Empty,
    #[error("weight list has {weights} entries but adjacency has {vertices}")]
    LengthMismatch { weights: usize, vertices: usize },
    #[error("vertex {vertex} has nonpositive weight")]
    NonPositiveWeight { vertex: usize },
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    #[error("adjacency is not symmetric: {vertex} lists {neighbor} but not vice versa")]
    AsymmetricAdjacency { vertex: usize, neighbor: usize },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once or lists itself")]
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    #[error("not a tree: {0}")]
    NotATree(&'static str),
    #[error("total weight {total} exceeds the supported bound 2^62")]
    WeightOverflow { total: u128 },
    #[error("oracle table of {cells} cells exceeds the limit of {limit}")]
    InstanceTooLarge { cells: u128, limit: u128 },
    #[error("family parameters out of range: {0}")]
    BadFamilyParams(String),
}

impl From<RotationDefect> for TreeError {
    fn from(d: RotationDefect) -> Self {
        match d {
            RotationDefect::OutOfRange { vertex, neighbor } => TreeError::NeighborOutOfRange { vertex, neighbor },
            RotationDefect::Loop { vertex } => TreeError::RepeatedNeighbor { vertex, neighbor: vertex },
            RotationDefect::Repeated { vertex, neighbor } => TreeError::RepeatedNeighbor { vertex, neighbor },
            RotationDefect::Asymmetric { vertex, neighbor } => TreeError::AsymmetricAdjacency { vertex, neighbor },
        }
    }
}

/// A tree on vertices `0..n` with positive integer weights.
///
/// `adjacency[v]` is the clockwise rotation of `v`; the Euler tour follows it.
/// Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedTree {
    adjacency: Vec<Vec<usize>>,
    weights: Vec<u64>,
    total: u64,
}

impl WeightedTree {
    pub fn new(weights: Vec<u64>, adjacency: Vec<Vec<usize>>) -> Result<Self, TreeError> {
        let n = adjacency.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if weights.len() != n {
            return Err(TreeError::LengthMismatch { weights: weights.len(), vertices: n });
        }
        if let Some(vertex) = weights.iter().position(|&w| w == 0) {
            return Err(TreeError::NonPositiveWeight { vertex });
        }
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        if total >= MAX_TOTAL_WEIGHT as u128 {
            return Err(TreeError::WeightOverflow { total });
        }
        rotation::check_simple_symmetric(&adjacency)?;
        let arcs: usize = adjacency.iter().map(Vec::len).sum();
        if arcs != 2 * (n - 1) {
            return Err(TreeError::NotATree(if arcs > 2 * (n - 1) {
                "too many edges, the graph has a cycle"
            } else {
                "too few edges, the graph is disconnected"
            }));
        }
        if !rotation::is_connected(&adjacency) {
            return Err(TreeError::NotATree("the graph is disconnected"));
        }
        Ok(Self { adjacency, weights, total: total as u64 })
    }

    /// Builds a tree from an edge list; each vertex's rotation is the order
    /// in which its edges appear.
    pub fn from_edges(weights: Vec<u64>, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        let n = weights.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for (a, b) in [(u, v), (v, u)] {
                if a >= n {
                    return Err(TreeError::NeighborOutOfRange { vertex: b, neighbor: a });
                }
                adjacency[a].push(b);
            }
        }
        Self::new(weights, adjacency)
    }

    /// Path `0 - 1 - ... - (n-1)` carrying `weights` in order.
    pub fn path(weights: Vec<u64>) -> Result<Self, TreeError> {
        let edges: Vec<_> = (1..weights.len()).map(|i| (i - 1, i)).collect();
        Self::from_edges(weights, &edges)
    }

    /// Star with center `0` and leaves `1..=leaves.len()`.
    pub fn star(center: u64, leaves: &[u64]) -> Result<Self, TreeError> {
        let mut weights = vec![center];
        weights.extend_from_slice(leaves);
        let edges: Vec<_> = (1..weights.len()).map(|i| (0, i)).collect();
        Self::from_edges(weights, &edges)
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Total weight `N2`.
    pub fn total_weight(&self) -> u64 {
        self.total
    }

    pub fn max_weight(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
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

    pub fn edge_count(&self) -> usize {
        self.len() - 1
    }

    /// Whether `vertices` is nonempty, duplicate-free, in range and induces a connected subgraph.
    pub fn is_connected_subset(&self, vertices: &[usize]) -> bool {
        let n = self.len();
        if vertices.is_empty() {
            return false;
        }
        let mut member = vec![false; n];
        for &v in vertices {
            if v >= n || member[v] {
                return false;
            }
            member[v] = true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![vertices[0]];
        seen[vertices[0]] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if member[u] && !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        reached == vertices.len()
    }

    pub fn subset_weight(&self, vertices: &[usize]) -> u64 {
        vertices.iter().map(|&v| self.weights[v]).sum()
    }
}
