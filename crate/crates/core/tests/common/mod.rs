#![allow(dead_code)]

use ksi_core::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph on `n` nodes whose edges are the set bits of `mask` over `pairs(n)`.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .zip(bits)
        .filter(|(_, &b)| b)
        .map(|(e, _)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Boundary count by the literal double loop over ordered pairs.
pub fn naive_boundary(g: &Graph, i: usize) -> u64 {
    let n = g.node_count();
    let mut count = g.degree(i) as u64;
    for j in 0..n {
        for k in 0..n {
            if g.has_edge(i, j) && g.has_edge(j, k) && !g.has_edge(i, k) && k != i {
                count += 1;
            }
        }
    }
    count
}
