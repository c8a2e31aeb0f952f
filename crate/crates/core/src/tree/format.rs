//! Tree file format.
//!
//! ```text
//! # comment
//! tree 3
//! 0: 2: 1
//! 1: 1: 0 2
//! 2: 4: 1
//! ```
//!
//! Header `tree <n>`, then one line `v: weight: neighbors...` per vertex.
//! The neighbor order is the rotation order.

use std::fmt::{self, Write as _};

use thiserror::Error;

use super::{TreeError, WeightedTree};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self { line, column, message: message.into() }
    }
}

/// Lines with comments stripped, paired with their 1-based line number.
/// Blank lines are dropped.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}

/// Whitespace-separated tokens with their 1-based columns.
pub(crate) fn tokens(s: &str, base_column: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((base_column + st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((base_column + st, &s[st..]));
    }
    out.into_iter()
}

pub(crate) fn parse_number<T: std::str::FromStr>(
    tok: &str,
    line: usize,
    column: usize,
    what: &str,
) -> Result<T, ParseError> {
    tok.parse().map_err(|_| ParseError::new(line, column, format!("expected {what}, found `{tok}`")))
}

/// Reads the `<keyword> <n>` header and returns `n`.
pub(crate) fn parse_header(line_no: usize, body: &str, keyword: &str) -> Result<usize, ParseError> {
    let toks: Vec<_> = tokens(body, 1).collect();
    match toks.as_slice() {
        [(_, kw), (col, n)] if *kw == keyword => parse_number(n, line_no, *col, "vertex count"),
        [(col, kw), ..] if *kw != keyword => {
            Err(ParseError::new(line_no, *col, format!("expected header `{keyword} <n>`")))
        }
        _ => Err(ParseError::new(line_no, 1, format!("expected header `{keyword} <n>`"))),
    }
}

pub fn parse_tree(text: &str) -> Result<WeightedTree, TreeError> {
    let mut lines = content_lines(text);
    let (hline, hbody) = lines.next().ok_or_else(|| ParseError::new(1, 1, "empty input"))?;
    let n = parse_header(hline, hbody, "tree")?;

    let mut weights: Vec<Option<u64>> = vec![None; n];
    let mut adjacency = vec![Vec::new(); n];
    let mut last_line = hline;
    for (line_no, body) in lines {
        last_line = line_no;
        let parts: Vec<&str> = body.splitn(3, ':').collect();
        if parts.len() != 3 {
            return Err(ParseError::new(line_no, 1, "expected `v: weight: neighbors...`").into());
        }
        let weight_col = parts[0].len() + 2;
        let nbr_col = weight_col + parts[1].len() + 1;

        let (vcol, vtok) = single_token(parts[0], 1, line_no, "vertex id")?;
        let v: usize = parse_number(vtok, line_no, vcol, "vertex id")?;
        if v >= n {
            return Err(ParseError::new(line_no, vcol, format!("vertex {v} out of range 0..{n}")).into());
        }
        if weights[v].is_some() {
            return Err(ParseError::new(line_no, vcol, format!("vertex {v} defined twice")).into());
        }
        let (wcol, wtok) = single_token(parts[1], weight_col, line_no, "weight")?;
        if wtok.starts_with('-') {
            return Err(TreeError::NonPositiveWeight { vertex: v });
        }
        let w: u64 = parse_number(wtok, line_no, wcol, "weight")?;
        weights[v] = Some(w);
        for (col, tok) in tokens(parts[2], nbr_col) {
            adjacency[v].push(parse_number(tok, line_no, col, "neighbor id")?);
        }
    }
    if let Some(missing) = weights.iter().position(Option::is_none) {
        return Err(ParseError::new(last_line + 1, 1, format!("missing line for vertex {missing}")).into());
    }
    WeightedTree::new(weights.into_iter().map(Option::unwrap).collect(), adjacency)
}

fn single_token<'a>(
    s: &'a str,
    base: usize,
    line: usize,
    what: &str,
) -> Result<(usize, &'a str), ParseError> {
    let toks: Vec<_> = tokens(s, base).collect();
    match toks.as_slice() {
        [one] => Ok(*one),
        [] => Err(ParseError::new(line, base, format!("missing {what}"))),
        [_, (col, extra), ..] => Err(ParseError::new(line, *col, format!("unexpected token `{extra}` after {what}"))),
    }
}

impl WeightedTree {
    /// Serializes in the tree file format; `parse_tree` reads it back unchanged.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tree {}", self.len())?;
        for v in 0..self.len() {
            let mut line = format!("{v}: {}:", self.weight(v));
            for &u in self.neighbors(v) {
                write!(line, " {u}")?;
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
