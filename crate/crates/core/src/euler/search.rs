use super::{build_euler_cycle, EulerCycle, SearchError};
use crate::tree::{SearchParams, WeightedTree};

/// Snapshot of the search window `[s, t]` on the Euler cycle.
///
/// `s` and `t` are absolute pointer positions (they only ever increase);
/// the stop under a pointer is `position % len`. `weight` is the weight of
/// the distinct tree vertices hit by the window.
#[derive(Debug, Clone)]
pub struct WindowState {
    pub s: usize,
    pub t: usize,
    pub weight: u64,
    pub steps: usize,
    len: usize,
    occ: Vec<usize>,
}

impl WindowState {
    fn new(n_vertices: usize, len: usize, start: usize) -> Self {
        Self { s: start, t: start, weight: 0, steps: 0, len, occ: vec![0; n_vertices] }
    }

    /// Number of stops in the window.
    pub fn window_len(&self) -> usize {
        self.t + 1 - self.s
    }

    pub fn cycle_len(&self) -> usize {
        self.len
    }

    /// Stops of tree vertex `v` currently inside the window.
    pub fn occurrences(&self, v: usize) -> usize {
        self.occ[v]
    }

    #[inline]
    fn enter(&mut self, v: usize, c: u64) {
        if self.occ[v] == 0 {
            self.weight += c;
        }
        self.occ[v] += 1;
    }

    #[inline]
    fn leave(&mut self, v: usize, c: u64) {
        self.occ[v] -= 1;
        if self.occ[v] == 0 {
            self.weight -= c;
        }
    }
}

/// A subtree whose weight lies in the requested band.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtreeResult {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub weight: u64,
    /// `(s, t)` stop indices of the window that produced the subtree; `None` for a one-vertex tree.
    pub window: Option<(usize, usize)>,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(SubtreeResult),
    NotFound { steps: usize },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&SubtreeResult> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::NotFound { .. } => None,
        }
    }

    pub fn into_found(self) -> Option<SubtreeResult> {
        match self {
            SearchOutcome::Found(r) => Some(r),
            SearchOutcome::NotFound { .. } => None,
        }
    }

    pub fn steps(&self) -> usize {
        match self {
            SearchOutcome::Found(r) => r.steps,
            SearchOutcome::NotFound { steps } => *steps,
        }
    }
}

/// Searches for a subtree of weight in `[k - g + 1, k]`.
///
/// Grows the window head until the weight reaches `k - g + 1`, reports it if
/// it is at most `k`, otherwise advances the tail while the weight exceeds
/// `k`, reports if the weight is still at least `k - g + 1`, and repeats.
/// Gives up once the tail has gone once around the cycle. At most
/// `3 * 2(N1 - 1)` pointer moves.
///
/// When [`check_conditions`](crate::check_conditions) reports `overall`, the
/// result is always `Found`.
pub fn find_subtree(
    tree: &WeightedTree,
    k: u64,
    g: u64,
    start: Option<usize>,
) -> Result<SearchOutcome, SearchError> {
    find_subtree_traced(tree, k, g, start, |_| {})
}

/// Like [`find_subtree`], calling `observe` on the initial window and after every pointer move.
pub fn find_subtree_traced(
    tree: &WeightedTree,
    k: u64,
    g: u64,
    start: Option<usize>,
    mut observe: impl FnMut(&WindowState),
) -> Result<SearchOutcome, SearchError> {
    if k == 0 || g == 0 {
        return Err(SearchError::InvalidTarget { k, g });
    }
    let params = SearchParams::new(k, g);
    if tree.len() == 1 {
        let w = tree.weight(0);
        return Ok(if params.accepts(w) {
            SearchOutcome::Found(SubtreeResult { vertices: vec![0], weight: w, window: None, steps: 0 })
        } else {
            SearchOutcome::NotFound { steps: 0 }
        });
    }
    if let Some(vertex) = (0..tree.len()).find(|&v| tree.weight(v) > k) {
        return Err(SearchError::WeightExceedsTarget { vertex, weight: tree.weight(vertex), k });
    }
    let cycle = build_euler_cycle(tree)?;
    let start = start.unwrap_or(0);
    if start >= cycle.len() {
        return Err(SearchError::StartOutOfRange { start, len: cycle.len() });
    }
    Ok(overload_discharge(tree, &cycle, params, start, &mut observe))
}

fn overload_discharge(
    tree: &WeightedTree,
    cycle: &EulerCycle,
    params: SearchParams,
    start: usize,
    observe: &mut impl FnMut(&WindowState),
) -> SearchOutcome {
    let len = cycle.len();
    let (lo, hi) = (params.lower(), params.k);
    let budget = 3 * len;
    let c = |v: usize| tree.weight(v);

    let mut w = WindowState::new(tree.len(), len, start);
    let v0 = cycle.vertex_at(start);
    w.enter(v0, c(v0));
    observe(&w);

    loop {
        // Overload: extend the head.
        while w.weight < lo {
            if w.window_len() >= len {
                // The window already covers the whole tree.
                return SearchOutcome::NotFound { steps: w.steps };
            }
            w.t += 1;
            let v = cycle.vertex_at(w.t);
            w.enter(v, c(v));
            w.steps += 1;
            observe(&w);
        }
        if w.weight <= hi {
            return found(tree, cycle, &w);
        }
        // Discharge: retract the tail. A single stop never exceeds k, so the window stays nonempty.
        // Past `start + len` every window repeats one shifted by a full turn.
        while w.weight > hi {
            if w.s >= start + len {
                return SearchOutcome::NotFound { steps: w.steps };
            }
            let v = cycle.vertex_at(w.s);
            w.leave(v, c(v));
            w.s += 1;
            w.steps += 1;
            debug_assert!(w.s <= w.t);
            observe(&w);
        }
        if w.weight >= lo {
            return found(tree, cycle, &w);
        }
        if w.s >= start + len {
            return SearchOutcome::NotFound { steps: w.steps };
        }
        assert!(w.steps <= budget, "search exceeded its step budget of {budget}");
    }
}

fn found(tree: &WeightedTree, cycle: &EulerCycle, w: &WindowState) -> SearchOutcome {
    let mut vertices = cycle.window_vertices(w.s, w.window_len(), tree.len());
    vertices.sort_unstable();
    debug_assert_eq!(tree.subset_weight(&vertices), w.weight);
    SearchOutcome::Found(SubtreeResult {
        vertices,
        weight: w.weight,
        window: Some((w.s % w.len, w.t % w.len)),
        steps: w.steps,
    })
}

/// Independent check of a claimed result: connected, weight recomputed, inside the band.
pub fn verify_subtree(tree: &WeightedTree, result: &SubtreeResult, k: u64, g: u64) -> bool {
    tree.is_connected_subset(&result.vertices)
        && tree.subset_weight(&result.vertices) == result.weight
        && SearchParams::new(k, g).accepts(result.weight)
}
