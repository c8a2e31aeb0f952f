//! Graphviz output for trees and plane graphs.

use std::collections::HashSet;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use subtree_weight::planar::PlaneGraph;
use subtree_weight::WeightedTree;

/// Undirected DOT for a tree, weights in the labels; `highlight` vertices are filled.
pub fn tree_dot(tree: &WeightedTree, highlight: &[usize]) -> Result<String> {
    let marked = marks(tree.len(), highlight)?;
    let mut out = String::from("graph tree {\n  node [shape=circle];\n");
    for (v, &m) in marked.iter().enumerate() {
        let style = if m { ", style=filled, fillcolor=\"#f4a582\"" } else { "" };
        writeln!(out, "  {v} [label=\"{v}\\nw={}\"{style}];", tree.weight(v))?;
    }
    for v in 0..tree.len() {
        for &u in tree.neighbors(v) {
            if v < u {
                let style = if marked[v] && marked[u] { " [penwidth=3, color=\"#b2182b\"]" } else { "" };
                writeln!(out, "  {v} -- {u}{style};")?;
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Undirected DOT for a plane graph; `highlight` is a cycle whose edges are drawn bold.
pub fn graph_dot(graph: &PlaneGraph, highlight: &[usize]) -> Result<String> {
    marks(graph.len(), highlight)?;
    let mut cycle_edges = HashSet::new();
    if !highlight.is_empty() {
        if highlight.len() < 3 {
            bail!("a highlighted cycle needs at least 3 vertices");
        }
        for i in 0..highlight.len() {
            let (a, b) = (highlight[i], highlight[(i + 1) % highlight.len()]);
            if !graph.has_edge(a, b) {
                bail!("highlighted vertices {a} and {b} are not adjacent");
            }
            cycle_edges.insert((a.min(b), a.max(b)));
        }
    }
    let on_cycle: HashSet<usize> = highlight.iter().copied().collect();
    let mut out = String::from("graph plane {\n  node [shape=circle];\n");
    for v in 0..graph.len() {
        let style = if on_cycle.contains(&v) { " [style=filled, fillcolor=\"#92c5de\"]" } else { "" };
        writeln!(out, "  {v}{style};")?;
    }
    for (u, v) in graph.edges() {
        let style = if cycle_edges.contains(&(u, v)) { " [penwidth=3, color=\"#2166ac\"]" } else { "" };
        writeln!(out, "  {u} -- {v}{style};")?;
    }
    out.push_str("}\n");
    Ok(out)
}

fn marks(n: usize, ids: &[usize]) -> Result<Vec<bool>> {
    let mut marked = vec![false; n];
    for &v in ids {
        if v >= n {
            bail!("highlight id {v} is out of range 0..{n}");
        }
        if marked[v] {
            bail!("highlight id {v} is repeated");
        }
        marked[v] = true;
    }
    Ok(marked)
}
