//! Plane graph file format.
//!
//! ```text
//! graph 4
//! 0: 1 3
//! 1: 2 0
//! 2: 3 1
//! 3: 0 2
//! hamilton: 0 1 2 3
//! ```
//!
//! Header `graph <n>`, one line `v: neighbors...` per vertex in rotation
//! order, and an optional `hamilton:` line. `#` starts a comment.

use std::fmt::Write as _;

use super::{HamiltonCycle, PlanarError, PlaneGraph};
use crate::tree::format::{content_lines, parse_header, parse_number, tokens};
use crate::tree::ParseError;

/// Parses a graph and its Hamilton cycle, if one is given.
pub fn parse_graph(text: &str) -> Result<(PlaneGraph, Option<HamiltonCycle>), PlanarError> {
    let mut lines = content_lines(text);
    let (hline, hbody) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let n = parse_header(hline, hbody, "graph")?;

    let mut adjacency: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut ham: Option<(usize, Vec<usize>)> = None;
    let mut last_line = hline;
    for (line_no, body) in lines {
        last_line = line_no;
        let Some((head, rest)) = body.split_once(':') else {
            return Err(ParseError::new(line_no, 1, "expected `v: neighbors...` or `hamilton: ...`").into());
        };
        let rest_col = head.len() + 2;
        if head.trim() == "hamilton" {
            if ham.is_some() {
                return Err(ParseError::new(line_no, 1, "second `hamilton:` line").into());
            }
            let order = tokens(rest, rest_col)
                .map(|(col, tok)| parse_number(tok, line_no, col, "vertex id"))
                .collect::<Result<Vec<usize>, _>>()?;
            ham = Some((line_no, order));
            continue;
        }
        let mut head_toks = tokens(head, 1);
        let (vcol, vtok) = head_toks.next().ok_or_else(|| ParseError::new(line_no, 1, "missing vertex id"))?;
        if let Some((col, extra)) = head_toks.next() {
            return Err(ParseError::new(line_no, col, format!("unexpected token `{extra}` before `:`")).into());
        }
        let v: usize = parse_number(vtok, line_no, vcol, "vertex id")?;
        if v >= n {
            return Err(ParseError::new(line_no, vcol, format!("vertex {v} out of range 0..{n}")).into());
        }
        if adjacency[v].is_some() {
            return Err(ParseError::new(line_no, vcol, format!("vertex {v} defined twice")).into());
        }
        let nbrs = tokens(rest, rest_col)
            .map(|(col, tok)| parse_number(tok, line_no, col, "neighbor id"))
            .collect::<Result<Vec<usize>, _>>()?;
        adjacency[v] = Some(nbrs);
    }
    if let Some(missing) = adjacency.iter().position(Option::is_none) {
        return Err(ParseError::new(last_line + 1, 1, format!("missing line for vertex {missing}")).into());
    }
    let graph = PlaneGraph::new(adjacency.into_iter().map(Option::unwrap).collect())?;
    let ham = match ham {
        Some((_, order)) => Some(HamiltonCycle::new(&graph, order)?),
        None => None,
    };
    Ok((graph, ham))
}

pub(super) fn write_graph(graph: &PlaneGraph, ham: Option<&HamiltonCycle>) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", graph.len()).unwrap();
    for v in 0..graph.len() {
        write!(out, "{v}:").unwrap();
        for u in graph.neighbors(v) {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    if let Some(h) = ham {
        out.push_str("hamilton:");
        for v in h.order() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
