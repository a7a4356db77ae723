//! Plain-text instance and arrangement formats.
//!
//! Edge list:
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>        (m lines, 1 <= u < v <= n)
//! ```
//! Interval set:
//! ```text
//! intervals <n>
//! <start> <end>    (n lines; integers or p/q)
//! ```
//! Arrangement: one `<vertex> <position>` line per vertex.
//!
//! Blank lines and lines starting with `c` are ignored in every format.

use std::fmt::Write as _;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{Coord, Interval, IntervalSet};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(t) if t.starts_with('c') => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_num<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `p <n> <m>` header"))?;
    if header.len() != 3 || header[0] != "p" {
        return Err(parse_err(line, "expected `p <n> <m>` header"));
    }
    let n: usize = parse_num(line, header[1], "vertex count")?;
    let m: usize = parse_num(line, header[2], "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in lines {
        if tokens.len() != 3 || tokens[0] != "e" {
            return Err(parse_err(line, "expected `e <u> <v>`"));
        }
        let u: usize = parse_num(line, tokens[1], "vertex")?;
        let v: usize = parse_num(line, tokens[2], "vertex")?;
        if u == 0 || v == 0 || u > n || v > n {
            return Err(parse_err(line, format!("edge ({u}, {v}) outside 1..={n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(parse_err(0, "duplicate edges"));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut pairs = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 2 {
            return Err(parse_err(line, "expected `<vertex> <position>`"));
        }
        let v: usize = parse_num(line, tokens[0], "vertex")?;
        let p: usize = parse_num(line, tokens[1], "position")?;
        pairs.push((line, v, p));
    }
    let n = pairs.len();
    let mut positions = vec![0usize; n];
    for (line, v, p) in pairs {
        if v == 0 || v > n {
            return Err(Error::InvalidArrangement(format!(
                "line {line}: vertex {v} outside 1..={n}"
            )));
        }
        if positions[v - 1] != 0 {
            return Err(Error::InvalidArrangement(format!(
                "line {line}: vertex {v} listed twice"
            )));
        }
        positions[v - 1] = p;
    }
    Arrangement::from_positions(positions)
}

pub fn write_arrangement(a: &Arrangement) -> String {
    let mut out = String::new();
    for (i, p) in a.positions().iter().enumerate() {
        writeln!(out, "{} {p}", i + 1).unwrap();
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<IntervalSet> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "missing `intervals <n>` header"))?;
    if header.len() != 2 || header[0] != "intervals" {
        return Err(parse_err(line, "expected `intervals <n>` header"));
    }
    let n: usize = parse_num(line, header[1], "interval count")?;
    let mut intervals = Vec::with_capacity(n);
    for (line, tokens) in lines {
        if tokens.len() != 2 {
            return Err(parse_err(line, "expected `<start> <end>`"));
        }
        let start: Coord = parse_num(line, tokens[0], "endpoint")?;
        let end: Coord = parse_num(line, tokens[1], "endpoint")?;
        intervals.push(Interval::new(start, end));
    }
    if intervals.len() != n {
        return Err(parse_err(
            0,
            format!("header declares {n} intervals, found {}", intervals.len()),
        ));
    }
    IntervalSet::new(intervals)
}

pub fn write_intervals(iv: &IntervalSet, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "intervals {}", iv.len()).unwrap();
    for i in iv.intervals() {
        writeln!(out, "{} {}", i.start, i.end).unwrap();
    }
    out
}

/// Either instance kind, told apart by the first content line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Intervals(IntervalSet),
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    match content_lines(text).next() {
        Some((_, tokens)) if tokens[0] == "intervals" => {
            parse_intervals(text).map(Instance::Intervals)
        }
        _ => parse_edge_list(text).map(Instance::Graph),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments() {
        let text = "c two cliques\n\np 4 4\ne 1 2\ne 1 3\ne 2 3\nc tail\ne 3 4\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(write_edge_list(&g), "p 4 4\ne 1 2\ne 1 3\ne 2 3\ne 3 4\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("p 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("p 3 1\ne 1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("p 3 1\ne 2 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("p 3 2\ne 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("p 3 2\ne 1 2\ne 2 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("p 3 1\nx 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn arrangement_roundtrip_and_errors() {
        let a = Arrangement::from_order(vec![2, 3, 1]).unwrap();
        let text = write_arrangement(&a);
        assert_eq!(text, "1 3\n2 1\n3 2\n");
        assert_eq!(parse_arrangement(&text).unwrap(), a);
        assert!(parse_arrangement("1 1\n1 2\n").is_err());
        assert!(parse_arrangement("1 1\n2 1\n").is_err());
        assert!(parse_arrangement("1 1\n3 2\n").is_err());
    }

    #[test]
    fn intervals_with_rationals() {
        let text = "c seed=3\nintervals 3\n1 3\n5/2 4\n-1/3 0\n";
        let set = parse_intervals(text).unwrap();
        assert_eq!(set.get(2).start, Coord::new(5, 2));
        assert_eq!(set.get(3).start, Coord::new(-1, 3));
        let written = write_intervals(&set, &["seed=3".to_string()]);
        assert_eq!(written, text);
    }

    #[test]
    fn intervals_errors() {
        assert!(matches!(parse_intervals("intervals 1\n4 2\n"), Err(Error::MalformedInterval { .. })));
        assert!(matches!(parse_intervals("intervals 2\n1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_intervals("intervals 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn instance_detection() {
        assert!(matches!(parse_instance("intervals 1\n0 1\n").unwrap(), Instance::Intervals(_)));
        assert!(matches!(parse_instance("p 1 0\n").unwrap(), Instance::Graph(_)));
    }
}
