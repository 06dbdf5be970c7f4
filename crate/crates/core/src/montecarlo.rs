//! Seeded Monte-Carlo estimates over G(n, p) set against the closed forms.

use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{er_expected, ErExpectation};
use crate::centrality::{boundary_edge_count, CentralitySet};
use crate::error::{Error, Result};
use crate::generators::erdos_renyi;
use crate::graph::NodeId;
use crate::rng::GraphRng;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub expected: f64,
    pub mean: f64,
    /// Standard error of the mean; `None` with a single sample.
    pub std_error: Option<f64>,
    /// `(mean - expected) / std_error`; `None` when the standard error is
    /// missing or zero.
    pub z: Option<f64>,
    /// `|z| <= z_limit`, or exact agreement when every sample is equal.
    /// `None` with a single sample.
    pub pass: Option<bool>,
}

fn estimate(samples: &[f64], expected: f64, z_limit: f64) -> Estimate {
    let n = samples.len();
    let mean = samples.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return Estimate {
            expected,
            mean,
            std_error: None,
            z: None,
            pass: None,
        };
    }
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
    let se = (var / n as f64).sqrt();
    if se == 0.0 {
        let tol = 1e-12 * expected.abs().max(1.0);
        return Estimate {
            expected,
            mean,
            std_error: Some(0.0),
            z: None,
            pass: Some((mean - expected).abs() <= tol),
        };
    }
    let z = (mean - expected) / se;
    Estimate {
        expected,
        mean,
        std_error: Some(se),
        z: Some(z),
        pass: Some(z.abs() <= z_limit),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloReport {
    pub n: usize,
    pub p: f64,
    pub samples: usize,
    pub seed: u64,
    pub z_limit: f64,
    pub closed_form: ErExpectation<f64>,
    /// Boundary count at one uniformly drawn node per sample.
    pub e_boundary: Estimate,
    /// Graph average of `xi_hat`, against the quoted closed form.
    pub xi_hat_avg: Estimate,
    /// Same samples against the exact expectation.
    pub xi_hat_avg_exact: Estimate,
    pub xi_avg: Estimate,
    /// Every estimate with a verdict passed; `None` when none has one.
    pub pass: Option<bool>,
}

pub const DEFAULT_Z_LIMIT: f64 = 3.0;

/// Sample `s` draws its graph and then its probe node from stream `s` of
/// `seed`, so the report does not depend on the worker count.
pub fn er_montecarlo(
    n: usize,
    p: f64,
    samples: usize,
    seed: u64,
    z_limit: f64,
) -> Result<MonteCarloReport> {
    let closed = er_expected(n, p)?;
    if samples == 0 {
        return Err(Error::param("at least one sample is required"));
    }
    let draws: Vec<[f64; 3]> = (0..samples as u64)
        .into_par_iter()
        .map(|s| {
            let mut rng = GraphRng::new(seed, s);
            let g = erdos_renyi(n, p, &mut rng)?;
            let probe = rng.below(n);
            let b = boundary_edge_count(&g, NodeId(probe))? as f64;
            let set = CentralitySet::<f64>::compute(&g);
            Ok([b, set.ksi_normalized.mean()?, set.ksi.mean()?])
        })
        .collect::<Result<_>>()?;
    let col = |c: usize| draws.iter().map(|d| d[c]).collect::<Vec<_>>();
    let (b, xh, x) = (col(0), col(1), col(2));
    let e_boundary = estimate(&b, closed.e_boundary, z_limit);
    let xi_hat_avg = estimate(&xh, closed.xi_hat_avg, z_limit);
    let xi_hat_avg_exact = estimate(&xh, closed.xi_hat_avg_exact, z_limit);
    let xi_avg = estimate(&x, closed.xi_avg, z_limit);
    let verdicts: Vec<bool> = [e_boundary, xi_hat_avg, xi_avg]
        .iter()
        .filter_map(|e| e.pass)
        .collect();
    let pass = if verdicts.is_empty() {
        None
    } else {
        Some(verdicts.iter().all(|&v| v))
    };
    Ok(MonteCarloReport {
        n,
        p,
        samples,
        seed,
        z_limit,
        closed_form: closed,
        e_boundary,
        xi_hat_avg,
        xi_hat_avg_exact,
        xi_avg,
        pass,
    })
}
