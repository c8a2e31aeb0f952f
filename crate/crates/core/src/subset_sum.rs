//! Dense subset-sum and partition instances, solved in linear time by laying
//! the values out on a path and searching for a subpath of the target weight.
//!
//! The dense solvers only answer inside their stated thresholds and return
//! [`Dense::NotApplicable`] elsewhere; [`oracle_subset_sum`] is the exact
//! pseudo-polynomial fallback.

use thiserror::Error;

use crate::euler::find_subtree;
use crate::tree::WeightedTree;
use crate::{MAX_TOTAL_WEIGHT, ORACLE_CELL_LIMIT};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubsetSumError {
    #[error("multiset must be nonempty")]
    Empty,
    #[error("value at position {index} is not positive")]
    NonPositive { index: usize },
    #[error("total exceeds the supported bound 2^62")]
    Overflow,
    #[error("partition needs an even total, got {total}")]
    OddTotal { total: u64 },
    #[error("target {k} exceeds half the total {total}")]
    TargetTooLarge { k: u64, total: u64 },
    #[error("target must be positive")]
    ZeroTarget,
    #[error("oracle table of {cells} cells exceeds the limit of {limit}")]
    InstanceTooLarge { cells: u128, limit: u128 },
}

/// Nonempty list of positive integers; positions are significant for witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multiset {
    values: Vec<u64>,
    total: u64,
}

impl Multiset {
    pub fn new(values: Vec<u64>) -> Result<Self, SubsetSumError> {
        if values.is_empty() {
            return Err(SubsetSumError::Empty);
        }
        if let Some(index) = values.iter().position(|&a| a == 0) {
            return Err(SubsetSumError::NonPositive { index });
        }
        let total: u128 = values.iter().map(|&a| a as u128).sum();
        if total >= MAX_TOTAL_WEIGHT as u128 {
            return Err(SubsetSumError::Overflow);
        }
        Ok(Self { values, total: total as u64 })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn max(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Chosen positions (sorted) and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetWitness {
    pub indices: Vec<usize>,
    pub sum: u64,
}

impl SubsetWitness {
    fn from_indices(set: &Multiset, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        let sum = indices.iter().map(|&i| set.values[i]).sum();
        Self { indices, sum }
    }

    /// Positions are distinct, in range, and sum to `target`.
    pub fn is_valid_for(&self, set: &Multiset, target: u64) -> bool {
        let mut seen = vec![false; set.len()];
        for &i in &self.indices {
            if i >= set.len() || seen[i] {
                return false;
            }
            seen[i] = true;
        }
        let sum: u64 = self.indices.iter().map(|&i| set.values[i]).sum();
        sum == self.sum && sum == target
    }

    pub fn is_contiguous(&self) -> bool {
        self.indices.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// Answer of a dense solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dense {
    True(SubsetWitness),
    False,
    /// The instance is outside the solver's threshold; no claim is made.
    NotApplicable,
}

impl Dense {
    pub fn decision(&self) -> Option<bool> {
        match self {
            Dense::True(_) => Some(true),
            Dense::False => Some(false),
            Dense::NotApplicable => None,
        }
    }

    pub fn witness(&self) -> Option<&SubsetWitness> {
        match self {
            Dense::True(w) => Some(w),
            _ => None,
        }
    }
}

/// Whether the linear-time criterion covers `(set, k)`:
/// `ΣA <= 2N - 2`, `ΣA - N + 1 <= k <= N` and every value at most `k`.
pub fn dense_applies(set: &Multiset, k: u64) -> bool {
    let n = set.len() as u128;
    let total = set.total() as u128;
    let k = k as u128;
    total + 2 <= 2 * n && total < k + n && k <= n && set.max() as u128 <= k
}

/// Subset of sum exactly `k` for dense instances, as a contiguous run of positions.
///
/// Inside the criterion the answer is always true; the witness comes from the
/// subtree search on the path `a_1 - a_2 - ... - a_N` with `g = 1`.
pub fn subset_sum_dense(set: &Multiset, k: u64) -> Dense {
    if k == 0 || !dense_applies(set, k) {
        return Dense::NotApplicable;
    }
    let path = WeightedTree::path(set.values.clone()).expect("a positive multiset forms a valid path");
    let hit = find_subtree(&path, k, 1, None)
        .expect("every value is at most k")
        .into_found()
        .expect("the dense criterion guarantees a subpath of weight k");
    debug_assert_eq!(hit.weight, k);
    Dense::True(SubsetWitness::from_indices(set, hit.vertices))
}

/// Partition into two halves of equal sum, for `N >= ΣA/2 + 1`.
///
/// In that regime the answer is true iff no value exceeds `ΣA/2`.
pub fn partition_dense(set: &Multiset) -> Result<Dense, SubsetSumError> {
    let total = set.total();
    if total % 2 == 1 {
        return Err(SubsetSumError::OddTotal { total });
    }
    let half = total / 2;
    if (set.len() as u64) < half + 1 {
        return Ok(Dense::NotApplicable);
    }
    if set.max() > half {
        return Ok(Dense::False);
    }
    match subset_sum_dense(set, half) {
        found @ Dense::True(_) => Ok(found),
        _ => unreachable!("N >= ΣA/2 + 1 puts the half-sum target inside the dense criterion"),
    }
}

/// Subset of sum `k <= ΣA/2` via partition of `A ∪ {ΣA - 2k}`, for `N >= ΣA - k`.
///
/// In that regime the answer is true iff no value exceeds `ΣA - k`. When
/// `ΣA = 2k` the padding element would be zero and is left out, which needs
/// `N >= k + 1` for the partition criterion; `N = k` is reported as not applicable.
pub fn subset_sum_via_partition(set: &Multiset, k: u64) -> Result<Dense, SubsetSumError> {
    let total = set.total();
    if k == 0 {
        return Err(SubsetSumError::ZeroTarget);
    }
    if 2 * k > total {
        return Err(SubsetSumError::TargetTooLarge { k, total });
    }
    if (set.len() as u64) < total - k {
        return Ok(Dense::NotApplicable);
    }
    let pad = total - 2 * k;
    if pad == 0 {
        return partition_dense(set);
    }
    if set.max() > total - k {
        return Ok(Dense::False);
    }
    let mut padded = set.values.clone();
    padded.push(pad);
    let padded = Multiset::new(padded)?;
    let pad_index = set.len();
    let side = match partition_dense(&padded)? {
        Dense::True(w) => w,
        _ => unreachable!("N + 1 >= ΣA - k + 1 puts the padded instance inside the partition criterion"),
    };
    // Whichever half holds the pad, the original positions on that half sum to k.
    let indices: Vec<usize> = if side.indices.contains(&pad_index) {
        side.indices.into_iter().filter(|&i| i != pad_index).collect()
    } else {
        let mut in_side = vec![false; padded.len()];
        for &i in &side.indices {
            in_side[i] = true;
        }
        (0..set.len()).filter(|&i| !in_side[i]).collect()
    };
    let w = SubsetWitness::from_indices(set, indices);
    debug_assert_eq!(w.sum, k);
    Ok(Dense::True(w))
}

/// Exact subset-sum by DP over reachable sums with first-reach back-pointers.
///
/// Returns a witness when `k` is reachable. `k = 0` is reachable by the empty set.
pub fn oracle_subset_sum(set: &Multiset, k: u64) -> Result<Option<SubsetWitness>, SubsetSumError> {
    let cells = set.len() as u128 * set.total() as u128;
    if cells > ORACLE_CELL_LIMIT {
        return Err(SubsetSumError::InstanceTooLarge { cells, limit: ORACLE_CELL_LIMIT });
    }
    if k > set.total() {
        return Ok(None);
    }
    let cap = set.total() as usize;
    // via[s] = index of the item whose addition first reached sum s.
    let mut via: Vec<Option<usize>> = vec![None; cap + 1];
    let mut reach = vec![false; cap + 1];
    reach[0] = true;
    for (i, &a) in set.values.iter().enumerate() {
        let a = a as usize;
        for s in (a..=cap).rev() {
            if reach[s - a] && !reach[s] {
                reach[s] = true;
                via[s] = Some(i);
            }
        }
    }
    let target = k as usize;
    if !reach[target] {
        return Ok(None);
    }
    let mut indices = Vec::new();
    let mut s = target;
    while s > 0 {
        let i = via[s].expect("reachable sums carry a back-pointer");
        indices.push(i);
        s -= set.values[i] as usize;
    }
    Ok(Some(SubsetWitness::from_indices(set, indices)))
}
