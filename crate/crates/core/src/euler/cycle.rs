use super::SearchError;
use crate::rotation::twin_slots;
use crate::tree::WeightedTree;

/// One stop of the Euler-tour cycle: the `slot`-th corner of `vertex`,
/// i.e. the corner between rotation entries `slot - 1` and `slot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Stop {
    pub vertex: usize,
    pub slot: usize,
}

/// Directed cycle with one stop per (vertex, incident edge) pair, `2(N1 - 1)` stops in all.
///
/// The stop `(u, i)` is followed by `(v, j + 1)` where `v` is the `i`-th
/// neighbor of `u` and `u` is the `j`-th neighbor of `v`. Consecutive stops
/// therefore sit on adjacent tree vertices, so every directed path of the
/// cycle projects to a subtree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCycle {
    stops: Vec<Stop>,
}

impl EulerCycle {
    pub fn len(&self) -> usize {
        self.stops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stops.is_empty()
    }

    pub fn stops(&self) -> &[Stop] {
        &self.stops
    }

    /// Tree vertex of the stop at cyclic position `i`.
    #[inline]
    pub fn vertex_at(&self, i: usize) -> usize {
        self.stops[i % self.stops.len()].vertex
    }

    pub fn successor(&self, i: usize) -> usize {
        (i + 1) % self.stops.len()
    }

    pub fn predecessor(&self, i: usize) -> usize {
        (i + self.stops.len() - 1) % self.stops.len()
    }

    /// Tree vertices of the window `s, s+1, ..., s+len-1` (cyclic), deduplicated, in first-visit order.
    pub fn window_vertices(&self, s: usize, len: usize, n_vertices: usize) -> Vec<usize> {
        let mut seen = vec![false; n_vertices];
        let mut out = Vec::new();
        for i in s..s + len {
            let v = self.vertex_at(i);
            if !seen[v] {
                seen[v] = true;
                out.push(v);
            }
        }
        out
    }
}

/// Walks the tree once around, starting at stop `(0, 0)`. `O(N1)`.
pub fn build_euler_cycle(tree: &WeightedTree) -> Result<EulerCycle, SearchError> {
    let n = tree.len();
    if n < 2 {
        return Err(SearchError::DegenerateTree);
    }
    let adj = tree.adjacency();
    let twin = twin_slots(adj);
    let len = 2 * (n - 1);
    let start = Stop { vertex: 0, slot: 0 };
    let mut stops = Vec::with_capacity(len);
    let mut cur = start;
    for _ in 0..len {
        stops.push(cur);
        let v = adj[cur.vertex][cur.slot];
        let j = twin[cur.vertex][cur.slot];
        cur = Stop { vertex: v, slot: (j + 1) % adj[v].len() };
    }
    assert_eq!(cur, start, "Euler walk did not close after 2(N1 - 1) stops");
    Ok(EulerCycle { stops })
}
