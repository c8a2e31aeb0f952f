use super::{
    build_dual_tree, split_by_hamilton, subtree_to_cycle, validate_cycle, CycleResult, DualTree, HamiltonCycle,
    PlanarError, PlaneGraph, Split,
};
use crate::euler::find_subtree;

/// Which case produced a [`HalfCycle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HalfBranch {
    /// The interior side has more than `3n/2` edges; search with `g = 1`.
    DenseInterior,
    /// Every interior face is shorter than `n/2`; search with `g = 2`.
    SmallInteriorFaces,
    /// Same on the exterior side.
    SmallExteriorFaces,
    /// The graph is the square of a cycle; the cycle is built directly.
    SquareOfCycle,
}

impl HalfBranch {
    pub fn name(self) -> &'static str {
        match self {
            HalfBranch::DenseInterior => "dense-interior",
            HalfBranch::SmallInteriorFaces => "small-interior-faces",
            HalfBranch::SmallExteriorFaces => "small-exterior-faces",
            HalfBranch::SquareOfCycle => "square-of-cycle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfCycle {
    pub cycle: CycleResult,
    pub branch: HalfBranch,
}

/// Cycle of length `n/2 - 2` or `n/2 - 1` in a 3-connected plane hamiltonian
/// graph with minimum degree at least 4 and even order `n >= 8`.
pub fn find_half_cycle_3conn(graph: &PlaneGraph, ham: &HamiltonCycle) -> Result<HalfCycle, PlanarError> {
    let n = graph.len();
    if n < 8 || n % 2 == 1 {
        return Err(PlanarError::Precondition(format!("order must be even and at least 8, got {n}")));
    }
    if graph.min_degree() < 4 {
        return Err(PlanarError::Precondition(format!("minimum degree is {}, need 4", graph.min_degree())));
    }
    if !is_three_connected(graph) {
        return Err(PlanarError::Precondition("graph is not 3-connected".into()));
    }
    let split = split_by_hamilton(graph, ham)?;
    let half = (n / 2) as u64;
    let target = half - 3;

    if 2 * split.edge_count(n, split.interior) > 3 * n {
        let dual = build_dual_tree(graph, ham, &split, split.interior);
        return search(graph, &dual, target, 1, HalfBranch::DenseInterior);
    }
    for (side, branch) in
        [(split.interior, HalfBranch::SmallInteriorFaces), (split.exterior(), HalfBranch::SmallExteriorFaces)]
    {
        let dual = build_dual_tree(graph, ham, &split, side);
        if dual.tree.len() > 1 && dual.tree.max_weight() <= target {
            return search(graph, &dual, target, 2, branch);
        }
    }
    square_of_cycle_branch(graph, ham, &split)
}

fn search(graph: &PlaneGraph, dual: &DualTree, k: u64, g: u64, branch: HalfBranch) -> Result<HalfCycle, PlanarError> {
    let hit = find_subtree(&dual.tree, k, g, None)
        .map_err(|e| PlanarError::UnexpectedStructure(format!("{}: {e}", branch.name())))?
        .into_found()
        .ok_or_else(|| {
            PlanarError::UnexpectedStructure(format!("{}: no face set of weight {}..={k}", branch.name(), k + 1 - g))
        })?;
    let vertices = subtree_to_cycle(dual, &hit.vertices);
    debug_assert!(validate_cycle(graph, &vertices));
    Ok(HalfCycle { cycle: CycleResult { vertices, steps: hit.steps }, branch })
}

fn square_of_cycle_branch(graph: &PlaneGraph, ham: &HamiltonCycle, split: &Split) -> Result<HalfCycle, PlanarError> {
    let n = graph.len();
    let half = n / 2;
    if split.edge_count(n, split.interior) != 3 * half || split.edge_count(n, split.exterior()) != 3 * half {
        return Err(PlanarError::UnexpectedStructure(
            "no branch applies although the sides are not balanced at 3n/2 edges".into(),
        ));
    }
    let order = square_cycle_order(graph, ham).ok_or_else(|| {
        PlanarError::UnexpectedStructure("no search branch applies and the graph is not the square of a cycle".into())
    })?;
    let vertices: Vec<usize> = square_cycle_pattern(half - 1).into_iter().map(|i| order[i]).collect();
    debug_assert!(validate_cycle(graph, &vertices));
    Ok(HalfCycle { cycle: CycleResult { vertices, steps: 0 }, branch: HalfBranch::SquareOfCycle })
}

/// Positions `0..len` of a cycle of length `len` in the square of a long enough cycle:
/// even positions upward, then odd positions back down.
fn square_cycle_pattern(len: usize) -> Vec<usize> {
    let evens = len.div_ceil(2);
    let mut out: Vec<usize> = (0..evens).map(|i| 2 * i).collect();
    let top_odd = if len % 2 == 1 { 2 * evens - 3 } else { 2 * evens - 1 };
    out.extend((0..len - evens).map(|i| top_odd - 2 * i));
    out
}

/// A cyclic order `c` with `E = {c_i c_{i+1}, c_i c_{i+2}}`, if the graph is a square of a cycle.
fn square_cycle_order(graph: &PlaneGraph, ham: &HamiltonCycle) -> Option<Vec<usize>> {
    if is_square_of(graph, ham.order()) {
        return Some(ham.order().to_vec());
    }
    // In C_n^2 with n >= 7, the cycle edges lie on two triangles and the chords on one.
    let n = graph.len();
    let mut mark = vec![usize::MAX; n];
    let mut cyc: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for &w in graph.neighbors(u) {
            mark[w] = u;
        }
        for &v in graph.neighbors(u) {
            if u < v {
                let common = graph.neighbors(v).iter().filter(|&&w| mark[w] == u).count();
                if common == 2 {
                    cyc[u].push(v);
                    cyc[v].push(u);
                }
            }
        }
    }
    if cyc.iter().any(|c| c.len() != 2) {
        return None;
    }
    let mut order = vec![0];
    let (mut prev, mut cur) = (0, cyc[0][0]);
    while cur != 0 && order.len() <= n {
        order.push(cur);
        let nxt = if cyc[cur][0] == prev { cyc[cur][1] } else { cyc[cur][0] };
        prev = cur;
        cur = nxt;
    }
    (order.len() == n && is_square_of(graph, &order)).then_some(order)
}

fn is_square_of(graph: &PlaneGraph, order: &[usize]) -> bool {
    let n = order.len();
    n == graph.len()
        && n >= 6
        && (0..n).all(|i| {
            let v = order[i];
            graph.degree(v) == 4
                && graph.has_edge(v, order[(i + 1) % n])
                && graph.has_edge(v, order[(i + 2) % n])
        })
}

/// At least four vertices and no pair of vertices whose removal disconnects the graph.
pub fn is_three_connected(graph: &PlaneGraph) -> bool {
    let n = graph.len();
    if n < 4 {
        return false;
    }
    (0..n).all(|removed| biconnected_without(graph.adjacency(), removed))
}

/// Whether the graph minus `removed` is connected with no cut vertex.
fn biconnected_without(adj: &[Vec<usize>], removed: usize) -> bool {
    let n = adj.len();
    let root = if removed == 0 { 1 } else { 0 };
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    disc[removed] = n;
    let mut time = 0;
    disc[root] = time;
    low[root] = time;
    time += 1;
    let mut root_children = 0;
    // (vertex, parent, next neighbor index)
    let mut stack = vec![(root, usize::MAX, 0usize)];
    while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
        if *i < adj[v].len() {
            let u = adj[v][*i];
            *i += 1;
            if u == removed || u == parent {
                continue;
            }
            if disc[u] == usize::MAX {
                disc[u] = time;
                low[u] = time;
                time += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((u, v, 0));
            } else {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[v]);
                if p != root && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    time == n - 1 && root_children <= 1
}
