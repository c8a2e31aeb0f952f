//! Subtrees whose weight falls in a target band, located by a two-pointer
//! window walk along the Euler tour of a vertex-weighted tree.
//!
//! The crate is organised in four layers:
//!
//! * [`tree`]: weighted trees with a fixed rotation order, the text format,
//!   the feasibility conditions for a guaranteed hit, a tree-knapsack oracle
//!   and the tightness families.
//! * [`euler`]: the Euler-tour cycle of a tree and the two-pointer search.
//! * [`planar`]: plane hamiltonian graphs, their dual trees and the cycle
//!   finders built on top of the subtree search.
//! * [`subset_sum`]: dense subset-sum and partition instances solved through
//!   the path special case, plus a pseudo-polynomial oracle.

pub mod euler;
pub mod planar;
mod rotation;
pub mod subset_sum;
pub mod tree;

pub use euler::{
    build_euler_cycle, find_subtree, find_subtree_traced, verify_subtree, EulerCycle,
    SearchError, SearchOutcome, Stop, SubtreeResult, WindowState,
};
pub use tree::{
    check_conditions, oracle_subtree_weights, ConditionFlag, ConditionReport, SearchParams,
    TightFamily, TightInstance, TreeError, WeightedTree,
};

/// Largest accepted total weight; keeps every window sum inside `u64` with room to spare.
pub const MAX_TOTAL_WEIGHT: u64 = 1 << 62;

/// Cell bound shared by the pseudo-polynomial oracles.
pub const ORACLE_CELL_LIMIT: u128 = 100_000_000;
