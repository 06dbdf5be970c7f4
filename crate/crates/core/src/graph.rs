//! Immutable undirected simple graphs in compressed adjacency form.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense node index in `0..n` of the graph it was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct NodeId(pub usize);

impl From<usize> for NodeId {
    fn from(i: usize) -> Self {
        NodeId(i)
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// What was dropped while normalizing raw input into a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl Normalization {
    pub fn is_clean(&self) -> bool {
        self.self_loops == 0 && self.duplicates == 0
    }
}

/// Undirected simple graph. Neighbor lists are sorted ascending, symmetric,
/// free of self-loops and duplicates.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    /// Builds a graph from unordered pairs, dropping self-loops and repeated
    /// edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_normalized(n, edges).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`] but also reports what was normalized away.
    pub fn from_edges_normalized<I>(n: usize, edges: I) -> Result<(Graph, Normalization)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut norm = Normalization::default();
        let mut degree = vec![0usize; n];
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                norm.self_loops += 1;
                continue;
            }
            pairs.push((u, v));
            degree[u] += 1;
            degree[v] += 1;
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0usize; *offsets.last().unwrap()];
        for &(u, v) in &pairs {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }

        // sort and dedup each row in place, then compact
        let mut compact = Vec::with_capacity(targets.len());
        let mut new_offsets = Vec::with_capacity(n + 1);
        new_offsets.push(0);
        let mut removed_slots = 0;
        for i in 0..n {
            let row = &mut targets[offsets[i]..offsets[i + 1]];
            row.sort_unstable();
            let before = compact.len();
            for &t in row.iter() {
                if compact.len() > before && *compact.last().unwrap() == t {
                    removed_slots += 1;
                } else {
                    compact.push(t);
                }
            }
            new_offsets.push(compact.len());
        }
        // every dropped duplicate removes one slot from each endpoint's row
        norm.duplicates = removed_slots / 2;

        Ok((
            Graph {
                offsets: new_offsets,
                targets: compact,
            },
            norm,
        ))
    }

    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.offsets
            .windows(2)
            .map(|w| w[1] - w[0])
            .max()
            .unwrap_or(0)
    }

    /// Sorted neighbor list of `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn check_node(&self, node: NodeId) -> Result<usize> {
        if node.0 < self.node_count() {
            Ok(node.0)
        } else {
            Err(Error::NodeOutOfRange {
                node: node.0,
                n: self.node_count(),
            })
        }
    }

    /// Canonical edge list: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.node_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.node_count())
            .field("m", &self.edge_count())
            .finish()
    }
}
