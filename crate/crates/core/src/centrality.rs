//! Ksi-centrality, normalized ksi-centrality and local clustering.
//!
//! Everything here starts from three integer counts per node `i`:
//!
//! * `degree`: `d_i = |N(i)|`
//! * `boundary`: `|E(N(i), V \ N(i))|`, the edges leaving the open
//!   neighborhood. Node `i` itself lies outside `N(i)`, so the `d_i` edges
//!   back to `i` are always included.
//! * `inner_edges`: `|E(N(i))|`, the edges among the neighbors.
//!
//! With those, `xi_i = boundary / d_i` and `xi_hat_i = boundary / (d_i (n - d_i))`.
//! Isolated nodes take `xi_i = 1` and `xi_hat_i = 1/n`.
//!
//! The neighborhood scan is the default path. The two dense-matrix paths
//! exist to cross-check it and are capped in size.

use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    Ksi,
    KsiNormalized,
    Clustering,
}

/// Per-node values of one measure, indexed by node id.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector<T = f64> {
    pub measure: Measure,
    pub values: Vec<T>,
    pub graph_n: usize,
}

impl<T: Scalar> CentralityVector<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Arithmetic mean, summed in node order.
    pub fn mean(&self) -> Result<T> {
        if self.values.is_empty() {
            return Err(Error::undefined("mean of an empty centrality vector"));
        }
        let sum = self
            .values
            .iter()
            .cloned()
            .fold(T::zero(), |acc, v| acc + v);
        Ok(sum / T::from_count(self.values.len()))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(Scalar::to_f64).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NodeCounts {
    pub degree: u64,
    pub boundary: u64,
    pub inner_edges: u64,
}

impl NodeCounts {
    pub fn ksi<T: Scalar>(&self) -> T {
        if self.degree == 0 {
            T::one()
        } else {
            T::from_ratio(self.boundary as i128, self.degree as i128)
        }
    }

    pub fn ksi_normalized<T: Scalar>(&self, n: usize) -> T {
        if self.degree == 0 {
            return T::from_ratio(1, n as i128);
        }
        let d = self.degree as i128;
        let outside = n as i128 - d;
        // a simple graph has d <= n - 1
        debug_assert!(outside > 0, "degree {d} not below node count {n}");
        T::from_ratio(self.boundary as i128, d * outside)
    }

    pub fn clustering<T: Scalar>(&self) -> T {
        if self.degree < 2 {
            T::zero()
        } else {
            let d = self.degree as i128;
            T::from_ratio(2 * self.inner_edges as i128, d * (d - 1))
        }
    }
}

fn common_count(a: &[usize], b: &[usize]) -> u64 {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Counts for one node by scanning its neighbors' sorted adjacency lists.
///
/// Each neighbor `j` contributes `d_j - |N(i) ∩ N(j)|` boundary edges; the
/// intersections summed over `j` count every inner edge twice.
pub fn node_counts(g: &Graph, node: NodeId) -> Result<NodeCounts> {
    let i = g.check_node(node)?;
    Ok(counts_unchecked(g, i))
}

fn counts_unchecked(g: &Graph, i: usize) -> NodeCounts {
    let ni = g.neighbors(i);
    let mut boundary = 0u64;
    let mut shared = 0u64;
    for &j in ni {
        let nj = g.neighbors(j);
        let c = common_count(ni, nj);
        boundary += nj.len() as u64 - c;
        shared += c;
    }
    NodeCounts {
        degree: ni.len() as u64,
        boundary,
        inner_edges: shared / 2,
    }
}

/// Adjacency rows as bitsets, `words` u64 per node.
struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    // beyond this the rows would take more than 32 MiB
    const MAX_NODES: usize = 1 << 14;

    fn new(g: &Graph) -> Self {
        let n = g.node_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for i in 0..n {
            for &j in g.neighbors(i) {
                bits[i * words + j / 64] |= 1 << (j % 64);
            }
        }
        BitRows { words, bits }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// Same counts as the merge scan, intersecting by popcount.
    fn counts(&self, g: &Graph, i: usize) -> NodeCounts {
        let ni = g.neighbors(i);
        let ri = self.row(i);
        let mut boundary = 0u64;
        let mut shared = 0u64;
        for &j in ni {
            let c: u64 = ri
                .iter()
                .zip(self.row(j))
                .map(|(a, b)| u64::from((a & b).count_ones()))
                .sum();
            boundary += g.degree(j) as u64 - c;
            shared += c;
        }
        NodeCounts {
            degree: ni.len() as u64,
            boundary,
            inner_edges: shared / 2,
        }
    }

    /// Bitsets pay off once the merge work `2 sum d_i^2` clearly exceeds
    /// the popcount work `2m * words`.
    fn worthwhile(g: &Graph) -> bool {
        let n = g.node_count();
        if n > Self::MAX_NODES || g.edge_count() == 0 {
            return false;
        }
        let merge: u64 = g.degrees().iter().map(|&d| (d * d) as u64).sum::<u64>() * 2;
        let popcount = 2 * g.edge_count() as u64 * n.div_ceil(64) as u64;
        merge > 4 * popcount
    }
}

/// Counts for every node; deterministic regardless of the rayon pool size.
/// Dense graphs intersect neighborhoods with bitsets, sparse ones with the
/// sorted-merge scan; both give the same integers.
pub fn all_node_counts(g: &Graph) -> Vec<NodeCounts> {
    if BitRows::worthwhile(g) {
        let rows = BitRows::new(g);
        (0..g.node_count())
            .into_par_iter()
            .map(|i| rows.counts(g, i))
            .collect()
    } else {
        (0..g.node_count())
            .into_par_iter()
            .map(|i| counts_unchecked(g, i))
            .collect()
    }
}

pub fn boundary_edge_count(g: &Graph, node: NodeId) -> Result<u64> {
    node_counts(g, node).map(|c| c.boundary)
}

pub fn ksi<T: Scalar>(g: &Graph, node: NodeId) -> Result<T> {
    node_counts(g, node).map(|c| c.ksi())
}

pub fn ksi_normalized<T: Scalar>(g: &Graph, node: NodeId) -> Result<T> {
    node_counts(g, node).map(|c| c.ksi_normalized(g.node_count()))
}

pub fn local_clustering<T: Scalar>(g: &Graph, node: NodeId) -> Result<T> {
    node_counts(g, node).map(|c| c.clustering())
}

fn vector_from<T, F>(
    g: &Graph,
    counts: &[NodeCounts],
    measure: Measure,
    f: F,
) -> CentralityVector<T>
where
    T: Scalar,
    F: Fn(&NodeCounts) -> T + Sync + Send,
{
    CentralityVector {
        measure,
        values: counts.par_iter().map(f).collect(),
        graph_n: g.node_count(),
    }
}

/// All three measures from a single scan.
#[derive(Debug, Clone)]
pub struct CentralitySet<T = f64> {
    pub counts: Vec<NodeCounts>,
    pub ksi: CentralityVector<T>,
    pub ksi_normalized: CentralityVector<T>,
    pub clustering: CentralityVector<T>,
}

impl<T: Scalar> CentralitySet<T> {
    pub fn compute(g: &Graph) -> Self {
        let counts = all_node_counts(g);
        let n = g.node_count();
        CentralitySet {
            ksi: vector_from(g, &counts, Measure::Ksi, |c| c.ksi()),
            ksi_normalized: vector_from(g, &counts, Measure::KsiNormalized, |c| {
                c.ksi_normalized(n)
            }),
            clustering: vector_from(g, &counts, Measure::Clustering, |c| c.clustering()),
            counts,
        }
    }
}

pub fn ksi_vector<T: Scalar>(g: &Graph) -> CentralityVector<T> {
    let counts = all_node_counts(g);
    vector_from(g, &counts, Measure::Ksi, |c| c.ksi())
}

pub fn ksi_normalized_vector<T: Scalar>(g: &Graph) -> CentralityVector<T> {
    let counts = all_node_counts(g);
    let n = g.node_count();
    vector_from(g, &counts, Measure::KsiNormalized, |c| c.ksi_normalized(n))
}

pub fn clustering_vector<T: Scalar>(g: &Graph) -> CentralityVector<T> {
    let counts = all_node_counts(g);
    vector_from(g, &counts, Measure::Clustering, |c| c.clustering())
}

/// Graph mean of `xi_i`.
pub fn average_ksi<T: Scalar>(g: &Graph) -> Result<T> {
    ksi_vector::<T>(g).mean()
}

/// Graph mean of `xi_hat_i`.
pub fn average_ksi_normalized<T: Scalar>(g: &Graph) -> Result<T> {
    ksi_normalized_vector::<T>(g).mean()
}

pub fn average_clustering<T: Scalar>(g: &Graph) -> Result<T> {
    clustering_vector::<T>(g).mean()
}

/// Size cap for the dense verification paths.
#[derive(Debug, Clone, Copy)]
pub struct DenseLimit {
    pub max_nodes: usize,
}

impl Default for DenseLimit {
    fn default() -> Self {
        DenseLimit { max_nodes: 5000 }
    }
}

impl DenseLimit {
    fn check(&self, g: &Graph) -> Result<()> {
        if g.node_count() > self.max_nodes {
            return Err(Error::Capacity {
                what: "dense matrix centrality",
                cap: self.max_nodes,
                n: g.node_count(),
                hint: "use the neighborhood-scan functions instead",
            });
        }
        if g.node_count() == 0 {
            return Err(Error::undefined("dense centrality of an empty graph"));
        }
        Ok(())
    }
}

fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.node_count();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let mut l = -adjacency_matrix(g);
    for i in 0..g.node_count() {
        l[(i, i)] = g.degree(i) as f64;
    }
    l
}

// entries are integers far below 2^53, so the f64 products are exact
fn exact(x: f64) -> i128 {
    x.round() as i128
}

/// `xi_i = (A^2 * Abar)_ii / (A^2)_ii` with `Abar = J - A`, by dense products.
pub fn ksi_via_adjacency_matrix<T: Scalar>(
    g: &Graph,
    limit: DenseLimit,
) -> Result<CentralityVector<T>> {
    limit.check(g)?;
    let n = g.node_count();
    let a = adjacency_matrix(g);
    let a2 = &a * &a;
    let abar = DMatrix::from_element(n, n, 1.0) - &a;
    let values = (0..n)
        .map(|i| {
            let den = exact(a2[(i, i)]);
            if den == 0 {
                return T::one();
            }
            let num = exact(a2.row(i).dot(&abar.column(i).transpose()));
            T::from_ratio(num, den)
        })
        .collect();
    Ok(CentralityVector {
        measure: Measure::Ksi,
        values,
        graph_n: n,
    })
}

/// `sum_{j,k} l_ij l_jk l_ki = (L^3)_ii` for every node, exactly.
///
/// Expanding `L = D - A` gives `(L^3)_ii = d_i^3 + 2 d_i^2 + b_i` with `b_i`
/// the boundary count. The often quoted `d_i^3 + b_i` drops the `2 d_i^2`
/// coming from the two `j = i` / `k = i` cross terms.
pub fn laplacian_triple_sums(g: &Graph, limit: DenseLimit) -> Result<Vec<i128>> {
    limit.check(g)?;
    let l = laplacian_matrix(g);
    let l2 = &l * &l;
    Ok((0..g.node_count())
        .map(|i| exact(l2.row(i).dot(&l.column(i).transpose())))
        .collect())
}

/// `xi_hat_i = ((L^3)_ii - 2 d_i^2) / (d_i (n - d_i)) - d_i^2 / (n - d_i)`.
pub fn ksi_normalized_via_laplacian<T: Scalar>(
    g: &Graph,
    limit: DenseLimit,
) -> Result<CentralityVector<T>> {
    let triple = laplacian_triple_sums(g, limit)?;
    let n = g.node_count() as i128;
    let values = triple
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let d = g.degree(i) as i128;
            if d == 0 {
                T::from_ratio(1, n)
            } else {
                T::from_ratio(t - 2 * d * d, d * (n - d)) - T::from_ratio(d * d, n - d)
            }
        })
        .collect();
    Ok(CentralityVector {
        measure: Measure::KsiNormalized,
        values,
        graph_n: g.node_count(),
    })
}
