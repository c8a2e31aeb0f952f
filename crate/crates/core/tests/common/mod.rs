#![allow(dead_code)]

use std::collections::BTreeSet;

use subtree_weight::planar::{
    dense_square_cycle, embed_hamiltonian, malkevitch, medial_prism, octahedron, random_plane_hamiltonian,
    square_cycle, HamiltonCycle, PlaneGraph,
};

/// Every simple cycle length, by DFS from each vertex through larger vertices only.
pub fn cycle_lengths(adj: &[Vec<usize>]) -> BTreeSet<usize> {
    fn dfs(adj: &[Vec<usize>], s: usize, v: usize, depth: usize, on: &mut [bool], out: &mut BTreeSet<usize>) {
        for &u in &adj[v] {
            if u == s && depth >= 3 {
                out.insert(depth);
            } else if u > s && !on[u] {
                on[u] = true;
                dfs(adj, s, u, depth + 1, on, out);
                on[u] = false;
            }
        }
    }
    let n = adj.len();
    let mut out = BTreeSet::new();
    let mut on = vec![false; n];
    for s in 0..n {
        on[s] = true;
        dfs(adj, s, s, 1, &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// First Hamilton cycle found by backtracking from vertex 0.
pub fn find_hamilton(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    fn go(adj: &[Vec<usize>], path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let v = *path.last().unwrap();
        if path.len() == adj.len() {
            return adj[v].contains(&path[0]);
        }
        for &u in &adj[v] {
            if !on[u] {
                on[u] = true;
                path.push(u);
                if go(adj, path, on) {
                    return true;
                }
                path.pop();
                on[u] = false;
            }
        }
        false
    }
    let mut on = vec![false; adj.len()];
    on[0] = true;
    let mut path = vec![0];
    go(adj, &mut path, &mut on).then_some(path)
}

pub fn adjacency_of(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..5 {
        let (u, un) = (1 + i, 1 + (i + 1) % 5);
        let (l, ln) = (6 + i, 6 + (i + 1) % 5);
        e.extend([(0, u), (u, un), (u, l), (u, ln), (l, ln), (l, 11)]);
    }
    e
}

pub fn icosahedron() -> (PlaneGraph, HamiltonCycle) {
    let edges = icosahedron_edges();
    let ham = find_hamilton(&adjacency_of(12, &edges)).expect("the icosahedron is hamiltonian");
    embed_hamiltonian(12, &edges, &ham).expect("the icosahedron is plane")
}

pub struct Fixture {
    pub name: String,
    pub graph: PlaneGraph,
    pub ham: HamiltonCycle,
}

fn fx(name: String, (graph, ham): (PlaneGraph, HamiltonCycle)) -> Fixture {
    Fixture { name, graph, ham }
}

/// 4-regular plane hamiltonian instances used for the degree-4 window checks.
pub fn four_regular_fixtures() -> Vec<Fixture> {
    let mut out = vec![fx("octahedron".into(), octahedron())];
    for n in (8..=60).step_by(2) {
        out.push(fx(format!("square-cycle {n}"), square_cycle(n).unwrap()));
    }
    for p in 1..=2 {
        out.push(fx(format!("malkevitch {p}"), malkevitch(p).unwrap()));
    }
    out
}

/// Every generated plane hamiltonian instance with at most 60 vertices.
pub fn all_fixtures() -> Vec<Fixture> {
    let mut out = four_regular_fixtures();
    for p in 3..=10 {
        out.push(fx(format!("malkevitch {p}"), malkevitch(p).unwrap()));
    }
    for t in 3..=20 {
        out.push(fx(format!("medial-prism {t}"), medial_prism(t).unwrap()));
    }
    for n in (8..=60).step_by(4) {
        for seed in 0..3 {
            out.push(fx(format!("dense-square-cycle {n} seed {seed}"), dense_square_cycle(n, seed).unwrap()));
        }
    }
    for n in 4..=60 {
        for (keep, seed) in [(100, 0), (100, 1), (80, 2), (50, 3), (0, 4)] {
            out.push(fx(
                format!("random {n} keep {keep} seed {seed}"),
                random_plane_hamiltonian(n, keep, seed).unwrap(),
            ));
        }
    }
    out.push(fx("icosahedron".into(), icosahedron()));
    out
}
