//! Measured AS-topology files.
//!
//! Two line-oriented UTF-8 formats, `\n` or `\r\n` terminated, tokens
//! separated by runs of spaces or tabs, `#` starting a comment that runs
//! to the end of the line:
//!
//! ```text
//! # plain edge list: <label> <label>
//! 701 1239
//! 1239 3356
//!
//! # timestamped: <label> <label> <first_seen> <last_seen>   (epoch seconds)
//! 701 1239 1167609600 1193875200
//! ```

use std::io::{BufRead, Write};

use crate::error::DatasetError;
use crate::graph::{DedupPolicy, Graph};

/// Published node counts of the measured topologies, kept as scale
/// references for fixtures and benchmarks.
pub mod scale {
    pub const CHINESE_2005: usize = 84;
    pub const SKITTER_2004: usize = 9_204;
    pub const ROUTEVIEWS_2004: usize = 17_446;
    pub const UCLA_2007: usize = 28_899;
}

/// 182 days, the default last-seen window.
pub const SIX_MONTHS_SECS: i64 = 182 * 86_400;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub lines: usize,
    pub comments: usize,
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
    /// Edges skipped by the label filter.
    pub filtered: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Skip edges touching AS-set or private-range labels.
    pub public_asns_only: bool,
}

#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub stats: ParseStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimestampedEdge {
    pub a: String,
    pub b: String,
    pub first_seen: i64,
    pub last_seen: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TimestampedTopology {
    pub edges: Vec<TimestampedEdge>,
}

/// `true` for a plain decimal AS number outside the private range
/// 64512-65534. AS-sets and anything non-numeric fail.
pub fn is_public_asn(label: &str) -> bool {
    if label.is_empty() || !label.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    match label.parse::<u64>() {
        Ok(asn) => !(64_512..=65_534).contains(&asn),
        Err(_) => false,
    }
}

/// Tokens before any `#`, and whether the line carried a comment.
fn tokens(line: &str) -> (Vec<&str>, bool) {
    let (body, comment) = match line.find('#') {
        Some(i) => (&line[..i], true),
        None => (line, false),
    };
    let toks = body
        .split([' ', '\t', '\r'])
        .filter(|t| !t.is_empty())
        .collect();
    (toks, comment)
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<ParsedEdgeList, DatasetError> {
    parse_edge_list_with(reader, ParseOptions::default())
}

pub fn parse_edge_list_with<R: BufRead>(
    reader: R,
    options: ParseOptions,
) -> Result<ParsedEdgeList, DatasetError> {
    let mut stats = ParseStats::default();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        stats.lines += 1;
        let (toks, comment) = tokens(&line);
        if comment {
            stats.comments += 1;
        }
        match toks.as_slice() {
            [] => continue,
            [a, b] => {
                if options.public_asns_only && !(is_public_asn(a) && is_public_asn(b)) {
                    stats.filtered += 1;
                    continue;
                }
                pairs.push((a.to_string(), b.to_string()));
            }
            other => {
                return Err(DatasetError::Parse {
                    line: line_no,
                    message: format!("expected 2 tokens, found {}", other.len()),
                })
            }
        }
    }
    let (graph, build) = Graph::from_labeled_edges(&pairs, DedupPolicy::SilentlyMerge)?;
    stats.self_loops_dropped = build.self_loops_dropped;
    stats.duplicates_merged = build.duplicates_merged;
    Ok(ParsedEdgeList { graph, stats })
}

pub fn parse_timestamped<R: BufRead>(reader: R) -> Result<TimestampedTopology, DatasetError> {
    let mut edges = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = i + 1;
        let (toks, _) = tokens(&line);
        match toks.as_slice() {
            [] => continue,
            [a, b, first, last] => {
                let parse = |t: &str, what: &str| {
                    t.parse::<i64>().map_err(|_| DatasetError::Parse {
                        line: line_no,
                        message: format!("{what} timestamp `{t}` is not an integer"),
                    })
                };
                let first_seen = parse(first, "first_seen")?;
                let last_seen = parse(last, "last_seen")?;
                if first_seen > last_seen {
                    return Err(DatasetError::Parse {
                        line: line_no,
                        message: format!("first_seen {first_seen} is after last_seen {last_seen}"),
                    });
                }
                edges.push(TimestampedEdge {
                    a: a.to_string(),
                    b: b.to_string(),
                    first_seen,
                    last_seen,
                });
            }
            other => {
                return Err(DatasetError::Parse {
                    line: line_no,
                    message: format!("expected 4 tokens, found {}", other.len()),
                })
            }
        }
    }
    Ok(TimestampedTopology { edges })
}

/// Keeps edges with `last_seen >= snapshot - window` and builds a graph
/// from them. Nodes survive only through a surviving edge, so a node's
/// liveness is the latest `last_seen` among its edges.
pub fn filter_last_seen(
    topology: &TimestampedTopology,
    snapshot: i64,
    window_secs: i64,
) -> Result<Graph, DatasetError> {
    if window_secs <= 0 {
        return Err(DatasetError::BadWindow(window_secs));
    }
    let cutoff = snapshot.saturating_sub(window_secs);
    let pairs: Vec<(&str, &str)> = topology
        .edges
        .iter()
        .filter(|e| e.last_seen >= cutoff)
        .map(|e| (e.a.as_str(), e.b.as_str()))
        .collect();
    let (graph, _) = Graph::from_labeled_edges(&pairs, DedupPolicy::SilentlyMerge)?;
    Ok(graph)
}

/// Writes one `label label` line per edge, in edge order.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v))?;
    }
    Ok(())
}
