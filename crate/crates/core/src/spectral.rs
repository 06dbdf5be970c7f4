//! Algebraic connectivity, exact Cheeger numbers, and the bounds that tie
//! them to ksi-centrality.

use nalgebra::{DMatrix, SymmetricEigen};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::centrality::{all_node_counts, NodeCounts};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::GraphRng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EigenMethod {
    DenseEigh,
    Iterative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralSummary {
    pub lambda2: f64,
    pub method: EigenMethod,
    /// `||L v - lambda2 v||_2` for the unit eigenvector found.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct SpectralOptions {
    /// Largest graph handled by the dense solver.
    pub dense_max: usize,
    /// Residual target for the iterative solver.
    pub tolerance: f64,
    /// Force one method regardless of size.
    pub force: Option<EigenMethod>,
    pub max_restarts: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            dense_max: 2000,
            tolerance: 1e-8,
            force: None,
            max_restarts: 500,
        }
    }
}

fn laplacian_apply(g: &Graph, x: &[f64], out: &mut [f64]) {
    out.par_iter_mut().enumerate().for_each(|(i, o)| {
        let nb = g.neighbors(i);
        let s: f64 = nb.iter().map(|&j| x[j]).sum();
        *o = nb.len() as f64 * x[i] - s;
    });
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn remove_mean(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter_mut().for_each(|x| *x -= mean);
}

fn residual(g: &Graph, v: &[f64], lambda: f64) -> f64 {
    let mut lv = vec![0.0; v.len()];
    laplacian_apply(g, v, &mut lv);
    lv.iter()
        .zip(v)
        .map(|(a, b)| (a - lambda * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Second-smallest eigenvalue of `L = D - A`. Zero (up to round-off) exactly
/// when the graph is disconnected.
pub fn algebraic_connectivity(g: &Graph, opts: &SpectralOptions) -> Result<SpectralSummary> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::undefined(
            "algebraic connectivity needs at least 2 nodes",
        ));
    }
    let method = opts.force.unwrap_or(if n <= opts.dense_max {
        EigenMethod::DenseEigh
    } else {
        EigenMethod::Iterative
    });
    match method {
        EigenMethod::DenseEigh => Ok(dense_lambda2(g)),
        EigenMethod::Iterative => lanczos_lambda2(g, opts),
    }
}

fn dense_lambda2(g: &Graph) -> SpectralSummary {
    let n = g.node_count();
    let mut l = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.edges() {
        l[(u, v)] = -1.0;
        l[(v, u)] = -1.0;
    }
    for i in 0..n {
        l[(i, i)] = g.degree(i) as f64;
    }
    let eig = SymmetricEigen::new(l);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let idx = order[1];
    let lambda2 = eig.eigenvalues[idx].max(0.0);
    let v: Vec<f64> = eig.eigenvectors.column(idx).iter().copied().collect();
    let vn = norm(&v);
    let v: Vec<f64> = v.iter().map(|x| x / vn).collect();
    SpectralSummary {
        lambda2,
        method: EigenMethod::DenseEigh,
        residual: residual(g, &v, eig.eigenvalues[idx]),
    }
}

/// Restarted Lanczos with full reorthogonalization, run in the complement of
/// the all-ones vector so that the smallest Ritz value approximates `lambda2`.
fn lanczos_lambda2(g: &Graph, opts: &SpectralOptions) -> Result<SpectralSummary> {
    let n = g.node_count();
    let krylov = (n - 1).min(120);
    let scale = 2.0 * g.max_degree().max(1) as f64;

    let mut rng = GraphRng::new(0x1a2c_0550, 0);
    let mut start: Vec<f64> = (0..n).map(|_| rng.next_f64() - 0.5).collect();
    remove_mean(&mut start);

    let mut best = (f64::INFINITY, f64::INFINITY);
    for _ in 0..opts.max_restarts {
        let s = norm(&start);
        if s == 0.0 {
            return Err(Error::NoConvergence("start vector vanished".into()));
        }
        let mut basis: Vec<Vec<f64>> = vec![start.iter().map(|x| x / s).collect()];
        let mut alphas = Vec::with_capacity(krylov);
        let mut betas = Vec::with_capacity(krylov);
        let mut w = vec![0.0; n];
        loop {
            let q = basis.last().unwrap();
            laplacian_apply(g, q, &mut w);
            alphas.push(dot(&w, q));
            // deflating the ones vector inside each pass keeps its round-off
            // from being amplified by the recurrence
            for _ in 0..2 {
                remove_mean(&mut w);
                for b in &basis {
                    let c = dot(&w, b);
                    w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
            }
            remove_mean(&mut w);
            let beta = norm(&w);
            if alphas.len() == krylov || beta < 1e-12 * scale {
                break;
            }
            betas.push(beta);
            basis.push(w.iter().map(|x| x / beta).collect());
        }

        let k = alphas.len();
        let t = DMatrix::from_fn(k, k, |i, j| {
            if i == j {
                alphas[i]
            } else if i + 1 == j {
                betas[i]
            } else if j + 1 == i {
                betas[j]
            } else {
                0.0
            }
        });
        let eig = SymmetricEigen::new(t);
        let (idx, theta) = eig
            .eigenvalues
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        let y = eig.eigenvectors.column(idx);
        let mut x = vec![0.0; n];
        for (coef, b) in y.iter().zip(&basis) {
            x.iter_mut().zip(b).for_each(|(xi, bi)| *xi += coef * bi);
        }
        remove_mean(&mut x);
        let xn = norm(&x);
        x.iter_mut().for_each(|v| *v /= xn);
        let r = residual(g, &x, theta);
        if r < best.1 {
            best = (theta, r);
        }
        if r < opts.tolerance {
            return Ok(SpectralSummary {
                lambda2: theta.max(0.0),
                method: EigenMethod::Iterative,
                residual: r,
            });
        }
        start = x;
    }
    Err(Error::NoConvergence(format!(
        "Lanczos stopped at lambda2 ~ {} with residual {:e}",
        best.0, best.1
    )))
}

/// Largest graph accepted by [`cheeger_exact`].
pub const CHEEGER_MAX_NODES: usize = 22;

/// `h(G) = min |E(S, S^c)| / |S|` over `0 < |S| <= n/2`, with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheegerResult {
    pub cut: u64,
    pub size: u64,
    /// Lexicographically smallest minimizing set, sorted.
    pub witness: Vec<usize>,
    pub n_evaluated: u64,
}

impl CheegerResult {
    pub fn h(&self) -> Ratio<u64> {
        Ratio::new(self.cut, self.size)
    }

    pub fn h_f64(&self) -> f64 {
        self.cut as f64 / self.size as f64
    }
}

/// `a` before `b` in the lexicographic order of sorted member lists.
fn lex_less(a: u32, b: u32) -> bool {
    if a == b {
        return false;
    }
    let low = (a ^ b).trailing_zeros();
    if (a >> low) & 1 == 1 {
        b >> low != 0
    } else {
        a >> low == 0
    }
}

#[derive(Clone, Copy)]
struct Candidate {
    cut: u64,
    size: u64,
    mask: u32,
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.cut * other.size;
        let rhs = other.cut * self.size;
        lhs < rhs || (lhs == rhs && lex_less(self.mask, other.mask))
    }
}

pub fn cheeger_exact(g: &Graph) -> Result<CheegerResult> {
    let n = g.node_count();
    if n > CHEEGER_MAX_NODES {
        return Err(Error::Capacity {
            what: "exact Cheeger enumeration",
            cap: CHEEGER_MAX_NODES,
            n,
            hint: "use the lambda2-based bounds instead",
        });
    }
    if n < 2 {
        return Err(Error::undefined("Cheeger number needs at least 2 nodes"));
    }
    let adj: Vec<u32> = (0..n)
        .map(|i| g.neighbors(i).iter().fold(0u32, |m, &j| m | (1 << j)))
        .collect();
    let half = (n / 2) as u32;
    let total: u32 = 1 << n;
    let chunk = (total / 64).max(1);
    let starts: Vec<u32> = (1..total).step_by(chunk as usize).collect();

    let (best, evaluated) = starts
        .into_par_iter()
        .map(|lo| {
            let hi = lo.saturating_add(chunk).min(total);
            let mut best: Option<Candidate> = None;
            let mut count = 0u64;
            for mask in lo..hi {
                let size = mask.count_ones();
                if size > half {
                    continue;
                }
                count += 1;
                let mut cut = 0u64;
                let mut rest = mask;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    cut += (adj[v] & !mask).count_ones() as u64;
                }
                let cand = Candidate {
                    cut,
                    size: size as u64,
                    mask,
                };
                if best.is_none_or(|b| cand.better_than(&b)) {
                    best = Some(cand);
                }
            }
            (best, count)
        })
        .reduce(
            || (None, 0),
            |(a, ca), (b, cb)| {
                let best = match (a, b) {
                    (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
                    (x, None) => x,
                    (None, y) => y,
                };
                (best, ca + cb)
            },
        );
    let best = best.expect("n >= 2 has a singleton subset");
    Ok(CheegerResult {
        cut: best.cut,
        size: best.size,
        witness: (0..n).filter(|&i| best.mask >> i & 1 == 1).collect(),
        n_evaluated: evaluated,
    })
}

/// `|E(S, S^c)|` for an explicit node set.
pub fn cut_size(g: &Graph, set: &[usize]) -> u64 {
    let mut inside = vec![false; g.node_count()];
    for &v in set {
        inside[v] = true;
    }
    set.iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&u| !inside[u]).count() as u64)
        .sum()
}

/// Slack allowed when comparing `n * xi_hat_i` with a numerical `lambda2`.
pub const LAMBDA2_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct Lambda2Report {
    pub n: usize,
    pub spectral: SpectralSummary,
    /// `n * xi_hat_i - lambda2` per node.
    pub slack: Vec<f64>,
    pub min_slack: f64,
    pub min_slack_node: usize,
    /// `n * Xi_hat - lambda2`.
    pub average_slack: f64,
    pub violations: Vec<usize>,
    pub average_holds: bool,
    pub holds: bool,
}

/// Checks `n * xi_hat_i >= lambda2` at every node and for the average.
pub fn verify_lambda2_bound(g: &Graph, opts: &SpectralOptions) -> Result<Lambda2Report> {
    let spectral = algebraic_connectivity(g, opts)?;
    let n = g.node_count();
    let nf = n as f64;
    let counts = all_node_counts(g);
    let xi_hat: Vec<f64> = counts.iter().map(|c| c.ksi_normalized::<f64>(n)).collect();
    let slack: Vec<f64> = xi_hat.iter().map(|x| nf * x - spectral.lambda2).collect();
    let (min_slack_node, min_slack) = slack
        .iter()
        .copied()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    let mean = xi_hat.iter().sum::<f64>() / nf;
    let average_slack = nf * mean - spectral.lambda2;
    let violations: Vec<usize> = slack
        .iter()
        .enumerate()
        .filter(|(_, &s)| s < -LAMBDA2_TOLERANCE)
        .map(|(i, _)| i)
        .collect();
    let average_holds = average_slack >= -LAMBDA2_TOLERANCE;
    Ok(Lambda2Report {
        n,
        spectral,
        min_slack,
        min_slack_node,
        average_slack,
        holds: violations.is_empty() && average_holds,
        average_holds,
        violations,
        slack,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CheegerNodeOutcome {
    pub node: usize,
    pub degree: u64,
    /// `d_i <= n/2  =>  xi_i >= h`; `None` when the premise fails.
    pub degree_bound: Option<bool>,
    /// `xi_hat_i >= h/(n - d_i)` if `d_i <= n/2`, else `xi_hat_i >= h/d_i`.
    pub normalized_bound: bool,
    /// `xi_hat_i >= h (n - d_i)` if `d_i <= n/2`, else `xi_hat_i >= h d_i`,
    /// the multiplicative form as usually quoted. Reported only.
    pub normalized_bound_as_quoted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheegerBoundReport {
    pub cheeger: CheegerResult,
    pub h: f64,
    pub nodes: Vec<CheegerNodeOutcome>,
    pub degree_bound_holds: bool,
    pub normalized_bound_holds: bool,
    pub normalized_bound_as_quoted_holds: bool,
}

fn node_outcome(node: usize, c: &NodeCounts, n: usize, h: Ratio<i128>) -> CheegerNodeOutcome {
    let n = n as i128;
    let d = c.degree as i128;
    let b = c.boundary as i128;
    let (xi, xi_hat) = if d == 0 {
        (Ratio::from_integer(1), Ratio::new(1, n))
    } else {
        (Ratio::new(b, d), Ratio::new(b, d * (n - d)))
    };
    let small = 2 * d <= n;
    let degree_bound = small.then(|| xi >= h);
    let normalized_bound = if small {
        xi_hat >= h / (n - d)
    } else {
        xi_hat >= h / d
    };
    let normalized_bound_as_quoted = if small {
        xi_hat >= h * (n - d)
    } else {
        xi_hat >= h * d
    };
    CheegerNodeOutcome {
        node,
        degree: c.degree,
        degree_bound,
        normalized_bound,
        normalized_bound_as_quoted,
    }
}

/// Evaluates the Cheeger-number bounds at every node, in exact arithmetic.
pub fn verify_cheeger_bounds(g: &Graph) -> Result<CheegerBoundReport> {
    let cheeger = cheeger_exact(g)?;
    let h = Ratio::new(cheeger.cut as i128, cheeger.size as i128);
    let n = g.node_count();
    let nodes: Vec<CheegerNodeOutcome> = all_node_counts(g)
        .iter()
        .enumerate()
        .map(|(i, c)| node_outcome(i, c, n, h))
        .collect();
    Ok(CheegerBoundReport {
        h: cheeger.h_f64(),
        degree_bound_holds: nodes.iter().all(|o| o.degree_bound != Some(false)),
        normalized_bound_holds: nodes.iter().all(|o| o.normalized_bound),
        normalized_bound_as_quoted_holds: nodes.iter().all(|o| o.normalized_bound_as_quoted),
        nodes,
        cheeger,
    })
}
