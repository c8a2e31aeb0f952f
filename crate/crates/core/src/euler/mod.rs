//! Euler-tour cycle of a tree and the overload/discharge window search on it.

mod cycle;
mod search;

pub use cycle::{build_euler_cycle, EulerCycle, Stop};
pub use search::{find_subtree, find_subtree_traced, verify_subtree, SearchOutcome, SubtreeResult, WindowState};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("a single-vertex tree has no Euler cycle")]
    DegenerateTree,
    #[error("vertex {vertex} has weight {weight} > k = {k}")]
    WeightExceedsTarget { vertex: usize, weight: u64, k: u64 },
    #[error("start stop {start} is out of range for a cycle of {len} stops")]
    StartOutOfRange { start: usize, len: usize },
    #[error("k and g must both be positive (k = {k}, g = {g})")]
    InvalidTarget { k: u64, g: u64 },
}
