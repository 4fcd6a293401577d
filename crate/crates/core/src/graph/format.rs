//! The `.fdg` text format:
//!
//! ```text
//! c optional comment
//! p fdg <n> <m>
//! e <tail> <head>      (m lines; the i-th defines edge i)
//! ```
//!
//! Ids are 1-based in the file.

use std::fmt::Write;

use super::Multigraph;
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

pub fn parse_fdg(text: &str) -> Result<Multigraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if header.is_some() {
                    return parse_err(line_no, "duplicate header line");
                }
                if parts.next() != Some("fdg") {
                    return parse_err(line_no, "expected `p fdg <n> <m>`");
                }
                let n = parse_count(parts.next(), line_no, "vertex count")?;
                let m = parse_count(parts.next(), line_no, "edge count")?;
                if parts.next().is_some() {
                    return parse_err(line_no, "trailing tokens after header");
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, m)) = header else {
                    return parse_err(line_no, "edge line before header");
                };
                if edges.len() == m {
                    return parse_err(line_no, format!("more than {m} edge lines"));
                }
                let t = parse_vertex(parts.next(), n, line_no)?;
                let h = parse_vertex(parts.next(), n, line_no)?;
                if parts.next().is_some() {
                    return parse_err(line_no, "trailing tokens after edge");
                }
                edges.push((t, h));
            }
            Some(tok) => return parse_err(line_no, format!("unknown line type `{tok}`")),
            None => unreachable!(),
        }
    }
    let Some((n, m)) = header else {
        return parse_err(last_line.max(1), "missing `p fdg` header");
    };
    if edges.len() != m {
        return parse_err(last_line.max(1), format!("expected {m} edge lines, found {}", edges.len()));
    }
    Multigraph::new(n, edges)
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.and_then(|t| t.parse().ok()).map_or_else(|| parse_err(line, format!("invalid {what}")), Ok)
}

fn parse_vertex(tok: Option<&str>, n: usize, line: usize) -> Result<usize> {
    match tok.and_then(|t| t.parse::<usize>().ok()) {
        Some(v) if (1..=n).contains(&v) => Ok(v - 1),
        Some(v) => parse_err(line, format!("vertex {v} outside 1..{n}")),
        None => parse_err(line, "invalid vertex id"),
    }
}

pub fn write_fdg(g: &Multigraph) -> String {
    let mut out = String::new();
    writeln!(out, "p fdg {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for &(t, h) in g.edges() {
        writeln!(out, "e {} {}", t + 1, h + 1).unwrap();
    }
    out
}
