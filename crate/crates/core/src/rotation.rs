//! Helpers shared by every rotation-system structure in the crate.

/// For every slot `(v, i)` returns the slot of the reverse arc, i.e. the `j`
/// with `adj[adj[v][i]][j] == v`.
///
/// Runs in `O(n + m)`. Adjacency must already be known to be symmetric and
/// free of parallel arcs.
pub(crate) fn twin_slots(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    // incoming[u] lists (v, i) with adj[v][i] == u.
    let mut incoming: Vec<Vec<(usize, usize)>> = adj.iter().map(|a| Vec::with_capacity(a.len())).collect();
    for (v, nbrs) in adj.iter().enumerate() {
        for (i, &u) in nbrs.iter().enumerate() {
            incoming[u].push((v, i));
        }
    }
    let mut twin: Vec<Vec<usize>> = adj.iter().map(|a| vec![usize::MAX; a.len()]).collect();
    let mut slot_of = vec![usize::MAX; n];
    for u in 0..n {
        for (j, &w) in adj[u].iter().enumerate() {
            slot_of[w] = j;
        }
        for &(v, i) in &incoming[u] {
            twin[v][i] = slot_of[v];
        }
        for &w in &adj[u] {
            slot_of[w] = usize::MAX;
        }
    }
    twin
}

/// Checks that the rotation lists describe a simple undirected graph:
/// no loops, no repeated neighbors, and `u ∈ adj[v]` iff `v ∈ adj[u]`.
/// Returns the first offending `(v, u)` pair.
pub(crate) fn check_simple_symmetric(adj: &[Vec<usize>]) -> Result<(), RotationDefect> {
    let n = adj.len();
    let mut seen = vec![usize::MAX; n];
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            if u >= n {
                return Err(RotationDefect::OutOfRange { vertex: v, neighbor: u });
            }
            if u == v {
                return Err(RotationDefect::Loop { vertex: v });
            }
            if seen[u] == v {
                return Err(RotationDefect::Repeated { vertex: v, neighbor: u });
            }
            seen[u] = v;
        }
    }
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (v, nbrs) in adj.iter().enumerate() {
        for &u in nbrs {
            incoming[u].push(v);
        }
    }
    let mut mark = vec![usize::MAX; n];
    for u in 0..n {
        for &w in &adj[u] {
            mark[w] = u;
        }
        for &v in &incoming[u] {
            if mark[v] != u {
                return Err(RotationDefect::Asymmetric { vertex: v, neighbor: u });
            }
        }
        if incoming[u].len() != adj[u].len() {
            for &v in &incoming[u] {
                mark[v] = usize::MAX;
            }
            let w = *adj[u].iter().find(|&&w| mark[w] == u).expect("missing reverse arc");
            return Err(RotationDefect::Asymmetric { vertex: u, neighbor: w });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RotationDefect {
    OutOfRange { vertex: usize, neighbor: usize },
    Loop { vertex: usize },
    Repeated { vertex: usize, neighbor: usize },
    Asymmetric { vertex: usize, neighbor: usize },
}

/// Connectivity by iterative DFS.
pub(crate) fn is_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}
