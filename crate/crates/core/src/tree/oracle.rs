use std::collections::BTreeSet;

use super::{TreeError, WeightedTree};
use crate::ORACLE_CELL_LIMIT;

/// Every weight `c(S)` attained by a subtree `S`, by rooted tree-knapsack DP.
///
/// For each vertex `v` the DP keeps the weights of subtrees whose topmost
/// vertex is `v`: start from `{c(v)}` and fold in each child `u` as
/// `A := A ∪ (A + B_u)`. The answer is the union over all `v`.
/// Independent of the Euler-tour machinery.
pub fn oracle_subtree_weights(tree: &WeightedTree) -> Result<BTreeSet<u64>, TreeError> {
    let n = tree.len();
    let cells = n as u128 * tree.total_weight() as u128;
    if cells > ORACLE_CELL_LIMIT {
        return Err(TreeError::InstanceTooLarge { cells, limit: ORACLE_CELL_LIMIT });
    }

    // Iterative DFS order from root 0; children are processed before parents
    // when walking the order backwards.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in tree.neighbors(v) {
            if parent[u] == usize::MAX {
                parent[u] = v;
                stack.push(u);
            }
        }
    }

    // sets[v][w] == true iff some subtree topped at v weighs w.
    let mut sets: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut achievable = vec![false; tree.total_weight() as usize + 1];
    for &v in order.iter().rev() {
        let cv = tree.weight(v) as usize;
        let mut acc = vec![false; cv + 1];
        acc[cv] = true;
        for &u in tree.neighbors(v) {
            if u == 0 || parent[u] != v {
                continue;
            }
            let child = std::mem::take(&mut sets[u]);
            let mut merged = acc.clone();
            merged.resize(acc.len() + child.len() - 1, false);
            for (a, _) in acc.iter().enumerate().filter(|(_, &x)| x) {
                for (b, _) in child.iter().enumerate().filter(|(_, &x)| x) {
                    merged[a + b] = true;
                }
            }
            acc = merged;
        }
        for (w, &hit) in acc.iter().enumerate() {
            if hit {
                achievable[w] = true;
            }
        }
        sets[v] = acc;
    }
    Ok(achievable.iter().enumerate().filter(|(_, &x)| x).map(|(w, _)| w as u64).collect())
}
