//! Seeded random and deterministic graph constructions.
//!
//! All random generators draw from [`GraphRng`] in a fixed order, so a
//! `(GenSpec, seed)` pair always yields the same canonical edge list.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::GraphRng;

/// Triad-closure probability used by the BHL growth phase.
pub const DEFAULT_TRIAD_PROBABILITY: f64 = 0.9;

/// Graph family plus its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    ErdosRenyi {
        n: usize,
        p: f64,
    },
    RingLattice {
        n: usize,
        k: usize,
    },
    WattsStrogatz {
        n: usize,
        k: usize,
        p: f64,
    },
    BarabasiAlbert {
        n: usize,
        m: usize,
        /// Size of the initial clique; defaults to `m`.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed_clique: Option<usize>,
    },
    HavelHakimi {
        degrees: Vec<usize>,
    },
    Bhl {
        n: usize,
        n0: usize,
        m: usize,
        #[serde(default = "default_triad")]
        triad_probability: f64,
    },
}

fn default_triad() -> f64 {
    DEFAULT_TRIAD_PROBABILITY
}

/// A reproducible generator invocation, serialized as
/// `{"family": ..., "params": {...}, "seed": ...}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        GenSpec { family, seed }
    }

    /// Generates the graph on RNG stream 0 of `seed`.
    pub fn generate(&self) -> Result<Graph> {
        self.generate_on_stream(0)
    }

    pub fn generate_on_stream(&self, stream: u64) -> Result<Graph> {
        let mut rng = GraphRng::new(self.seed, stream);
        self.family.generate(&mut rng)
    }

    /// One-line description used in file headers.
    pub fn describe(&self) -> String {
        format!("{} seed={}", self.family.describe(), self.seed)
    }
}

impl Family {
    pub fn generate(&self, rng: &mut GraphRng) -> Result<Graph> {
        match *self {
            Family::ErdosRenyi { n, p } => erdos_renyi(n, p, rng),
            Family::RingLattice { n, k } => ring_lattice(n, k),
            Family::WattsStrogatz { n, k, p } => watts_strogatz(n, k, p, rng),
            Family::BarabasiAlbert { n, m, seed_clique } => {
                barabasi_albert(n, m, seed_clique.unwrap_or(m), rng)
            }
            Family::HavelHakimi { ref degrees } => havel_hakimi(degrees),
            Family::Bhl {
                n,
                n0,
                m,
                triad_probability,
            } => bhl(n, n0, m, triad_probability, rng),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Family::ErdosRenyi { n, p } => format!("generator=erdos_renyi n={n} p={p}"),
            Family::RingLattice { n, k } => format!("generator=ring_lattice n={n} k={k}"),
            Family::WattsStrogatz { n, k, p } => {
                format!("generator=watts_strogatz n={n} k={k} p={p}")
            }
            Family::BarabasiAlbert { n, m, seed_clique } => format!(
                "generator=barabasi_albert n={n} m={m} seed_clique={}",
                seed_clique.unwrap_or(*m)
            ),
            Family::HavelHakimi { degrees } => {
                let d: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
                format!("generator=havel_hakimi degrees={}", d.join(","))
            }
            Family::Bhl {
                n,
                n0,
                m,
                triad_probability,
            } => format!("generator=bhl n={n} n0={n0} m={m} triad_probability={triad_probability}"),
        }
    }
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::param(format!("{name} must lie in [0, 1], got {p}")))
    }
}

/// G(n, p): every pair `i < j`, in lexicographic order, is kept with
/// probability `p`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut GraphRng) -> Result<Graph> {
    check_probability("p", p)?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.bernoulli(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Circulant graph: `i` is adjacent to `i ± 1, ..., i ± k (mod n)`.
pub fn ring_lattice(n: usize, k: usize) -> Result<Graph> {
    if 2 * k >= n {
        return Err(Error::param(format!(
            "ring lattice needs 2k < n, got n={n} k={k}"
        )));
    }
    Graph::from_edges(n, lattice_edges(n, k))
}

fn lattice_edges(n: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (1..=k).map(move |o| (i, (i + o) % n)))
}

/// Watts–Strogatz rewiring of the ring lattice.
///
/// Edges `(i, i + o)` are visited for `i = 0..n`, `o = 1..=k`. With
/// probability `p` the far endpoint is replaced by a uniform node that is
/// neither `i` nor already adjacent to it; after `n` failed draws the edge is
/// kept. The edge count stays `n k`.
pub fn watts_strogatz(n: usize, k: usize, p: f64, rng: &mut GraphRng) -> Result<Graph> {
    check_probability("rewiring probability", p)?;
    if 2 * k >= n {
        return Err(Error::param(format!(
            "Watts-Strogatz needs 2k < n, got n={n} k={k}"
        )));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (u, v) in lattice_edges(n, k) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    for i in 0..n {
        for o in 1..=k {
            if !rng.bernoulli(p) {
                continue;
            }
            let j = (i + o) % n;
            for _ in 0..n {
                let w = rng.below(n);
                if w != i && !adj[i].contains(&w) {
                    adj[i].remove(&j);
                    adj[j].remove(&i);
                    adj[i].insert(w);
                    adj[w].insert(i);
                    break;
                }
            }
        }
    }
    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)));
    Graph::from_edges(n, edges)
}

/// Degree-proportional sampler over an endpoint multiset.
struct Preferential {
    endpoints: Vec<usize>,
}

impl Preferential {
    /// Draws until a node not marked in `taken` comes up. Falls back to a
    /// uniform draw over `0..existing` while no edges exist yet.
    fn draw(&self, existing: usize, taken: &[bool], rng: &mut GraphRng) -> usize {
        loop {
            let v = if self.endpoints.is_empty() {
                rng.below(existing)
            } else {
                self.endpoints[rng.below(self.endpoints.len())]
            };
            if !taken[v] {
                return v;
            }
        }
    }
}

/// Barabási–Albert growth from a clique on `seed_clique` nodes. Each new
/// node attaches to `m` distinct existing nodes drawn proportionally to
/// degree; repeated draws are rejected.
pub fn barabasi_albert(
    n: usize,
    m: usize,
    seed_clique: usize,
    rng: &mut GraphRng,
) -> Result<Graph> {
    if m == 0 || m >= n {
        return Err(Error::param(format!(
            "Barabasi-Albert needs 1 <= m < n, got n={n} m={m}"
        )));
    }
    if seed_clique < m || seed_clique > n {
        return Err(Error::param(format!(
            "seed clique size {seed_clique} must lie in [m, n] = [{m}, {n}]"
        )));
    }
    let mut edges = Vec::new();
    let mut pref = Preferential {
        endpoints: Vec::new(),
    };
    for u in 0..seed_clique {
        for v in u + 1..seed_clique {
            edges.push((u, v));
            pref.endpoints.extend([u, v]);
        }
    }
    let mut taken = vec![false; n];
    let mut chosen = Vec::with_capacity(m);
    for v in seed_clique..n {
        chosen.clear();
        while chosen.len() < m {
            let t = pref.draw(v, &taken, rng);
            taken[t] = true;
            chosen.push(t);
        }
        for &t in &chosen {
            taken[t] = false;
            edges.push((t, v));
            pref.endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(n, edges)
}

/// Deterministic Havel–Hakimi realization.
///
/// Repeatedly takes the node with the largest residual degree (smallest id
/// on ties) and joins it to the nodes with the next-largest residuals.
pub fn havel_hakimi(degrees: &[usize]) -> Result<Graph> {
    let n = degrees.len();
    let mut residual = degrees.to_vec();
    let mut retired = vec![false; n];
    let mut edges = Vec::new();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for step in 1..=n {
        order.clear();
        order.extend((0..n).filter(|&i| !retired[i]));
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let Some(&v) = order.first() else { break };
        let need = residual[v];
        if need == 0 {
            break;
        }
        let available = order[1..].iter().take_while(|&&u| residual[u] > 0).count();
        if available < need {
            return Err(Error::NotGraphical(format!(
                "step {step}: node {v} needs {need} more neighbors but only {available} remain"
            )));
        }
        for &u in &order[1..=need] {
            residual[u] -= 1;
            edges.push((v, u));
        }
        residual[v] = 0;
        retired[v] = true;
    }
    Graph::from_edges(n, edges)
}

const BHL_MAX_RETRIES: usize = 100;

/// Scale-free growth with triad closure, started from a Havel–Hakimi core.
///
/// 1. Draw `n0` degrees uniformly from `m..=n0-m`; if the sum is odd, add one
///    to the first entry below `n0 - 1`. Realize with [`havel_hakimi`],
///    redrawing up to 100 times if the sequence is not graphical.
/// 2. Each new node picks `m` distinct targets. The first is drawn
///    proportionally to degree. Each further one is, with probability
///    `triad_probability`, a uniform neighbor of the previous target that
///    is not yet chosen; otherwise (or if no such neighbor exists) it is a
///    fresh degree-proportional draw.
pub fn bhl(
    n: usize,
    n0: usize,
    m: usize,
    triad_probability: f64,
    rng: &mut GraphRng,
) -> Result<Graph> {
    check_probability("triad probability", triad_probability)?;
    if m == 0 || m >= n0 || n0 > n {
        return Err(Error::param(format!(
            "BHL needs 1 <= m < n0 <= n, got n={n} n0={n0} m={m}"
        )));
    }
    if 2 * m > n0 {
        return Err(Error::param(format!(
            "BHL initial degrees are drawn from m..=n0-m, which is empty for n0={n0} m={m}"
        )));
    }

    let mut core = None;
    for _ in 0..=BHL_MAX_RETRIES {
        let mut degrees: Vec<usize> = (0..n0).map(|_| m + rng.below(n0 - 2 * m + 1)).collect();
        if degrees.iter().sum::<usize>() % 2 == 1 {
            if let Some(d) = degrees.iter_mut().find(|d| **d < n0 - 1) {
                *d += 1;
            }
        }
        match havel_hakimi(&degrees) {
            Ok(g) => {
                core = Some(g);
                break;
            }
            Err(Error::NotGraphical(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let core = core.ok_or_else(|| {
        Error::NotGraphical(format!(
            "no graphical initial sequence after {BHL_MAX_RETRIES} retries"
        ))
    })?;

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut pref = Preferential {
        endpoints: Vec::new(),
    };
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
        pref.endpoints.extend([u, v]);
    }

    let mut taken = vec![false; n];
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    let mut candidates: Vec<usize> = Vec::new();
    for v in n0..n {
        chosen.clear();
        while chosen.len() < m {
            let mut pick = None;
            if let Some(&prev) = chosen.last() {
                if rng.bernoulli(triad_probability) {
                    candidates.clear();
                    candidates.extend(adj[prev].iter().copied().filter(|&u| !taken[u]));
                    if !candidates.is_empty() {
                        pick = Some(candidates[rng.below(candidates.len())]);
                    }
                }
            }
            let t = pick.unwrap_or_else(|| pref.draw(v, &taken, rng));
            taken[t] = true;
            chosen.push(t);
        }
        for &t in &chosen {
            taken[t] = false;
            adj[t].push(v);
            adj[v].push(t);
            edges.push((t, v));
            pref.endpoints.extend([t, v]);
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rng() -> GraphRng {
        GraphRng::new(42, 0)
    }

    #[test]
    fn er_extremes() {
        assert_eq!(erdos_renyi(10, 0.0, &mut rng()).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(10, 1.0, &mut rng()).unwrap().edge_count(), 45);
        assert!(erdos_renyi(10, 1.5, &mut rng()).is_err());
        assert!(erdos_renyi(10, -0.1, &mut rng()).is_err());
    }

    #[test]
    fn lattice() {
        let g = ring_lattice(6, 1).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]
        );
        assert_eq!(ring_lattice(5, 2).unwrap().edge_count(), 10);
        assert!(ring_lattice(4, 2).is_err());
    }

    #[test]
    fn ws_zero_is_lattice() {
        assert_eq!(
            watts_strogatz(30, 3, 0.0, &mut rng()).unwrap(),
            ring_lattice(30, 3).unwrap()
        );
    }

    #[test]
    fn ws_keeps_edge_count() {
        for p in [0.1, 0.5, 1.0] {
            let g = watts_strogatz(60, 5, p, &mut rng()).unwrap();
            assert_eq!(g.edge_count(), 300);
        }
    }

    #[test]
    fn ba_small() {
        let g = barabasi_albert(4, 3, 3, &mut rng()).unwrap();
        assert_eq!(g.edge_count(), 6);
        let g = barabasi_albert(2, 1, 1, &mut rng()).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(barabasi_albert(3, 3, 3, &mut rng()).is_err());
        assert!(barabasi_albert(3, 0, 0, &mut rng()).is_err());
    }

    #[test]
    fn ba_edge_count() {
        let (n, m) = (200, 7);
        let g = barabasi_albert(n, m, m, &mut rng()).unwrap();
        assert_eq!(g.edge_count(), m * (n - m) + m * (m - 1) / 2);
    }

    #[test]
    fn hh_examples() {
        let k4 = havel_hakimi(&[3, 3, 3, 3]).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let tri = havel_hakimi(&[2, 2, 2]).unwrap();
        assert_eq!(tri.edge_count(), 3);
        let err = havel_hakimi(&[3, 1]).unwrap_err();
        assert!(
            matches!(err, Error::NotGraphical(ref s) if s.contains("step 1")),
            "{err}"
        );
        assert!(havel_hakimi(&[1, 1, 1]).is_err());
        assert_eq!(havel_hakimi(&[]).unwrap().node_count(), 0);
    }

    #[test]
    fn hh_realizes_degrees() {
        let seq = [5, 4, 4, 3, 3, 2, 2, 1, 0];
        let g = havel_hakimi(&seq).unwrap();
        assert_eq!(g.degrees(), seq.to_vec());
    }

    #[test]
    fn bhl_counts() {
        let (n, n0, m) = (120, 40, 5);
        let g = bhl(n, n0, m, 0.9, &mut rng()).unwrap();
        let core_only = bhl(n0, n0, m, 0.9, &mut rng()).unwrap();
        assert_eq!(g.edge_count() - core_only.edge_count(), (n - n0) * m);
        for i in 0..n0 {
            let d = core_only.degree(i);
            assert!(d >= m && d <= n0 - m + 1, "core degree {d}");
        }
        assert!(bhl(10, 10, 6, 0.9, &mut rng()).is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = GenSpec::new(
            Family::WattsStrogatz {
                n: 10,
                k: 2,
                p: 0.3,
            },
            9,
        );
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            text,
            r#"{"family":"watts_strogatz","params":{"n":10,"k":2,"p":0.3},"seed":9}"#
        );
        let back: GenSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
        let bhl: GenSpec =
            serde_json::from_str(r#"{"family":"bhl","params":{"n":50,"n0":20,"m":3},"seed":1}"#)
                .unwrap();
        assert!(
            matches!(bhl.family, Family::Bhl { triad_probability, .. } if triad_probability == 0.9)
        );
    }
}
