//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated non-negative integer
//! labels; further columns (weights, timestamps) are ignored. Lines starting
//! with `#` are comments, except that a `# nodes=<n> ...` line declares the
//! labels `0..n` so that isolated nodes survive a write/read cycle.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Normalization};

/// A parsed graph together with the original label of every dense id.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub normalization: Normalization,
}

impl LabeledGraph {
    pub fn label(&self, id: usize) -> u64 {
        self.labels[id]
    }
}

fn declared_nodes(comment: &str) -> Option<u64> {
    comment
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("nodes="))
        .and_then(|v| v.parse().ok())
}

/// Parses an edge list, compacting labels to `0..n` in order of first
/// appearance. A `# nodes=N` comment declares labels `0..N`, which then map
/// to themselves, so isolated nodes and node order survive a round trip.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut edges = Vec::new();
    let mut declared: Option<u64> = None;

    let mut intern = |label: u64, labels: &mut Vec<u64>| -> usize {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            labels.len() - 1
        })
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if declared.is_none() {
                declared = declared_nodes(comment);
            }
            continue;
        }
        let mut tokens = line.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: "expected two node labels".into(),
                })
            }
        };
        let parse = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("'{tok}' is not a non-negative integer label"),
            })
        };
        let (a, b) = (parse(a)?, parse(b)?);
        let u = intern(a, &mut labels);
        let v = intern(b, &mut labels);
        edges.push((u, v));
    }

    if let Some(n) = declared {
        if labels.iter().all(|&l| l < n) {
            // Declared labels keep their own value as id.
            for e in &mut edges {
                *e = (labels[e.0] as usize, labels[e.1] as usize);
            }
            labels = (0..n).collect();
        } else {
            log::warn!("ignoring nodes={n} header: edge labels exceed it");
        }
    }

    let (graph, normalization) = Graph::from_edges_normalized(labels.len(), edges)?;
    Ok(LabeledGraph {
        graph,
        labels,
        normalization,
    })
}

/// Writes the canonical form: a `# nodes=<n> edges=<m>` header followed by
/// one `u v` line per edge, `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    write_edge_list_into(g, &mut out);
    out
}

pub(crate) fn write_edge_list_into(g: &Graph, out: &mut String) {
    let _ = writeln!(out, "# nodes={} edges={}", g.node_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
}
