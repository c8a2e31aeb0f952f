use std::fmt;

use super::{build_dual_tree, split_by_hamilton, subtree_to_cycle, HamiltonCycle, PlanarError, PlaneGraph};
use crate::euler::{find_subtree, SearchError};

/// A simple cycle of the graph as a cyclic vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleResult {
    pub vertices: Vec<usize>,
    /// Pointer moves spent by the subtree search; 0 for directly constructed cycles.
    pub steps: usize,
}

impl CycleResult {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycleOutcome {
    Found(CycleResult),
    NotFound { steps: usize },
}

impl CycleOutcome {
    pub fn found(&self) -> Option<&CycleResult> {
        match self {
            CycleOutcome::Found(c) => Some(c),
            CycleOutcome::NotFound { .. } => None,
        }
    }

    pub fn into_found(self) -> Option<CycleResult> {
        match self {
            CycleOutcome::Found(c) => Some(c),
            CycleOutcome::NotFound { .. } => None,
        }
    }
}

/// Distinct vertices, at least three, consecutive ones adjacent, closing edge present.
pub fn validate_cycle(graph: &PlaneGraph, vertices: &[usize]) -> bool {
    let n = graph.len();
    if vertices.len() < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..vertices.len()).all(|i| graph.has_edge(vertices[i], vertices[(i + 1) % vertices.len()]))
}

/// Sufficient conditions for [`find_cycle_near`] to succeed, with the
/// density `γ = m/n - 2` taken from the instance. Everything is kept in
/// integers: `γn = m - 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypothesisReport {
    pub n: usize,
    pub m: usize,
    pub k: u64,
    pub g: u64,
    /// `-1 <= γ < 1`.
    pub density_ok: bool,
    /// `g + γn + 2 > 0`.
    pub slack_ok: bool,
    /// `3 <= k <= n`.
    pub range_ok: bool,
    /// `floor((1 - γ)n / 2) <= k`.
    pub lower_ok: bool,
    /// `k <= (1 + γ)n / 2 + 2g + 3/2`.
    pub upper_ok: bool,
    pub overall: bool,
}

impl fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} k={} g={} density={} slack={} range={} lower={} upper={} overall={}",
            self.n,
            self.m,
            self.k,
            self.g,
            self.density_ok,
            self.slack_ok,
            self.range_ok,
            self.lower_ok,
            self.upper_ok,
            self.overall
        )
    }
}

pub fn check_cycle_hypotheses(graph: &PlaneGraph, k: u64, g: u64) -> HypothesisReport {
    let n = graph.len() as i128;
    let m = graph.edge_count() as i128;
    let (ki, gi) = (k as i128, g as i128);
    let gamma_n = m - 2 * n;
    let density_ok = m >= n && m < 3 * n;
    let slack_ok = gi + gamma_n + 2 > 0;
    let range_ok = 3 <= ki && ki <= n;
    let lower_ok = (3 * n - m).div_euclid(2) <= ki;
    let upper_ok = 2 * ki <= m - n + 4 * gi + 3;
    HypothesisReport {
        n: graph.len(),
        m: graph.edge_count(),
        k,
        g,
        density_ok,
        slack_ok,
        range_ok,
        lower_ok,
        upper_ok,
        overall: density_ok && slack_ok && range_ok && lower_ok && upper_ok,
    }
}

/// Cycle of length in `[k - g + 1, k]` from a connected set of interior faces
/// of total weight in `[k - g - 1, k - 2]`.
///
/// Always succeeds when [`check_cycle_hypotheses`] reports `overall`.
pub fn find_cycle_near(graph: &PlaneGraph, ham: &HamiltonCycle, k: u64, g: u64) -> Result<CycleOutcome, PlanarError> {
    if k < 3 || g == 0 {
        return Err(PlanarError::InvalidTarget { k, g });
    }
    let split = split_by_hamilton(graph, ham)?;
    let dual = build_dual_tree(graph, ham, &split, split.interior);
    match find_subtree(&dual.tree, k - 2, g, None) {
        Ok(out) => Ok(match out.into_found() {
            Some(hit) => {
                let vertices = subtree_to_cycle(&dual, &hit.vertices);
                debug_assert!(validate_cycle(graph, &vertices));
                CycleOutcome::Found(CycleResult { vertices, steps: hit.steps })
            }
            None => CycleOutcome::NotFound { steps: 0 },
        }),
        // A face longer than k can never be part of a short enough cycle.
        Err(SearchError::WeightExceedsTarget { .. }) => Ok(CycleOutcome::NotFound { steps: 0 }),
        Err(e) => unreachable!("dual tree search rejected valid arguments: {e}"),
    }
}

/// `(k, g)` whose band `[k - g + 1, k]` is exactly `[ceil(n/3), floor(2n/3)]`.
pub fn mohr_params(n: usize) -> (u64, u64) {
    let n = n as u64;
    let k = 2 * n / 3;
    let lo = n.div_ceil(3);
    (k, k + 1 - lo)
}

/// Cycle of length between `n/3` and `2n/3`; guaranteed when `m >= 2n` and `n >= 5`.
pub fn mohr_cycle(graph: &PlaneGraph, ham: &HamiltonCycle) -> Result<CycleOutcome, PlanarError> {
    let (k, g) = mohr_params(graph.len());
    find_cycle_near(graph, ham, k, g)
}
