//! Distribution summaries and the ensemble experiments built on them.

use num_traits::Float;
use rayon::prelude::*;
use serde::Serialize;

use crate::analytic::{analytic_centrality, FamilyParams};
use crate::centrality::CentralitySet;
use crate::error::{Error, Result};
use crate::generators::{Family, GenSpec};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram<F> {
    /// `bins + 1` edges; bin `b` covers `[edges[b], edges[b + 1])`, the last
    /// bin is closed on the right.
    pub edges: Vec<F>,
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistributionSummary<F = f64> {
    pub count: usize,
    pub mean: F,
    /// Sample variance (`n - 1` denominator); 0 for a single value.
    pub variance: F,
    /// Adjusted Fisher–Pearson skewness `g1 * sqrt(n(n-1)) / (n-2)`; 0 when
    /// the values are constant or fewer than three.
    pub skewness: F,
    pub min: F,
    pub max: F,
    pub histogram: Histogram<F>,
}

fn cast<F: Float>(x: usize) -> F {
    F::from(x).expect("count fits in float")
}

/// Moments and an equal-width histogram over `[min, max]`.
pub fn summarize<F: Float>(values: &[F], bins: usize) -> Result<DistributionSummary<F>> {
    if values.is_empty() {
        return Err(Error::undefined("summary of an empty vector"));
    }
    if bins == 0 {
        return Err(Error::param("histogram needs at least one bin"));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::undefined("summary of non-finite values"));
    }
    let count = values.len();
    let nf: F = cast(count);
    let min = values.iter().copied().fold(F::infinity(), F::min);
    let max = values.iter().copied().fold(F::neg_infinity(), F::max);
    let mean = values.iter().copied().fold(F::zero(), |a, v| a + v) / nf;

    let (mut m2, mut m3) = (F::zero(), F::zero());
    for &v in values {
        let d = v - mean;
        m2 = m2 + d * d;
        m3 = m3 + d * d * d;
    }
    let variance = if count > 1 {
        m2 / (nf - F::one())
    } else {
        F::zero()
    };
    let skewness = if count > 2 && m2 > F::zero() {
        let pm2 = m2 / nf;
        let pm3 = m3 / nf;
        let g1 = pm3 / pm2.powf(cast::<F>(3) / cast(2));
        g1 * (nf * (nf - F::one())).sqrt() / (nf - cast(2))
    } else {
        F::zero()
    };

    let histogram = if max > min {
        let width = (max - min) / cast(bins);
        let edges = (0..=bins)
            .map(|b| {
                if b == bins {
                    max
                } else {
                    min + width * cast(b)
                }
            })
            .collect();
        let mut counts = vec![0usize; bins];
        for &v in values {
            let b = ((v - min) / width)
                .floor()
                .to_usize()
                .unwrap_or(0)
                .min(bins - 1);
            counts[b] += 1;
        }
        Histogram { edges, counts }
    } else {
        Histogram {
            edges: vec![min, max],
            counts: vec![count],
        }
    };

    Ok(DistributionSummary {
        count,
        mean,
        variance,
        skewness,
        min,
        max,
        histogram,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    RightSkewed,
    Centered,
    LeftSkewed,
}

impl Shape {
    pub fn as_str(&self) -> &'static str {
        match self {
            Shape::RightSkewed => "right_skewed",
            Shape::Centered => "centered",
            Shape::LeftSkewed => "left_skewed",
        }
    }
}

/// Skewness cut-offs for [`shape_classify`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShapeThresholds {
    pub right: f64,
    pub left: f64,
}

impl Default for ShapeThresholds {
    fn default() -> Self {
        ShapeThresholds {
            right: 0.5,
            left: -0.5,
        }
    }
}

pub fn shape_classify<F: Float>(s: &DistributionSummary<F>, t: ShapeThresholds) -> Result<Shape> {
    if s.count < 3 {
        return Err(Error::undefined("shape needs at least three values"));
    }
    let g = s.skewness.to_f64().unwrap_or(0.0);
    Ok(if g > t.right {
        Shape::RightSkewed
    } else if g < t.left {
        Shape::LeftSkewed
    } else {
        Shape::Centered
    })
}

pub const DEFAULT_BINS: usize = 50;

#[derive(Debug, Clone, Serialize)]
pub struct NetworkReport {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub xi_avg: f64,
    pub xi_hat_avg: f64,
    pub clustering_avg: f64,
    pub xi: DistributionSummary<f64>,
    pub xi_hat: DistributionSummary<f64>,
    /// Shape of the `xi` distribution; `None` below three nodes.
    pub shape: Option<Shape>,
    pub shape_xi_hat: Option<Shape>,
}

impl NetworkReport {
    /// `network,Xi_hat,Xi,n`
    pub fn table_row(&self) -> (String, f64, f64, usize) {
        (self.id.clone(), self.xi_hat_avg, self.xi_avg, self.n)
    }
}

pub fn network_report(
    id: &str,
    g: &Graph,
    bins: usize,
    thresholds: ShapeThresholds,
) -> Result<NetworkReport> {
    if g.node_count() == 0 {
        return Err(Error::undefined("report on an empty graph"));
    }
    let set = CentralitySet::<f64>::compute(g);
    let xi = summarize(&set.ksi.values, bins)?;
    let xi_hat = summarize(&set.ksi_normalized.values, bins)?;
    let shape = shape_classify(&xi, thresholds).ok();
    let shape_xi_hat = shape_classify(&xi_hat, thresholds).ok();
    Ok(NetworkReport {
        id: id.to_string(),
        n: g.node_count(),
        m: g.edge_count(),
        xi_avg: set.ksi.mean()?,
        xi_hat_avg: set.ksi_normalized.mean()?,
        clustering_avg: set.clustering.mean()?,
        xi,
        xi_hat,
        shape,
        shape_xi_hat,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioPoint {
    pub p: f64,
    /// Mean over seeds of `Xi(G_0) / Xi(G_p)`.
    pub xi_ratio: f64,
    /// Mean over seeds of `Xi_hat(G_0) / Xi_hat(G_p)`.
    pub xi_hat_ratio: f64,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.iter().all(|p| (0.0..=1.0).contains(p)) {
        Ok(())
    } else {
        Err(Error::param("probability grid values must lie in [0, 1]"))
    }
}

/// Ratio of ring-lattice to rewired averages along a rewiring grid.
///
/// `G_0` values come from the exact ring-lattice forms; each `(p, seed)`
/// graph is generated independently on stream 0 of `seed`.
pub fn ratio_series_ws(
    n: usize,
    k: usize,
    p_grid: &[f64],
    seeds: &[u64],
) -> Result<Vec<RatioPoint>> {
    check_grid(p_grid)?;
    if seeds.is_empty() {
        return Err(Error::param("at least one seed is required"));
    }
    let base = analytic_centrality::<f64>(FamilyParams::RingLattice { n, k })?;
    let jobs: Vec<(usize, u64)> = (0..p_grid.len())
        .flat_map(|pi| seeds.iter().map(move |&s| (pi, s)))
        .collect();
    let ratios: Vec<(f64, f64)> = jobs
        .par_iter()
        .map(|&(pi, seed)| {
            let g = GenSpec::new(
                Family::WattsStrogatz {
                    n,
                    k,
                    p: p_grid[pi],
                },
                seed,
            )
            .generate()?;
            let set = CentralitySet::<f64>::compute(&g);
            Ok((
                base.xi_avg / set.ksi.mean()?,
                base.xi_hat_avg / set.ksi_normalized.mean()?,
            ))
        })
        .collect::<Result<_>>()?;
    let per = seeds.len();
    Ok(p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let chunk = &ratios[pi * per..(pi + 1) * per];
            RatioPoint {
                p,
                xi_ratio: chunk.iter().map(|r| r.0).sum::<f64>() / per as f64,
                xi_hat_ratio: chunk.iter().map(|r| r.1).sum::<f64>() / per as f64,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BaCell {
    pub n: usize,
    pub k_ratio: f64,
    /// Attachment count actually used: `round(k_ratio * n)` clamped to `1..n`.
    pub m: usize,
    pub xi_hat_avg: f64,
    pub xi_avg: f64,
}

pub fn ba_attachment(n: usize, k_ratio: f64) -> usize {
    ((k_ratio * n as f64).round() as usize).clamp(1, n.saturating_sub(1).max(1))
}

/// Mean `Xi_hat` and `Xi` of Barabási–Albert graphs on an `(n, k/n)` grid.
/// Rows are ordered by ratio, then by `n`.
pub fn ba_size_invariance(
    n_grid: &[usize],
    k_ratio_grid: &[f64],
    seeds: &[u64],
) -> Result<Vec<BaCell>> {
    if seeds.is_empty() {
        return Err(Error::param("at least one seed is required"));
    }
    if k_ratio_grid.iter().any(|r| !(*r > 0.0 && *r < 1.0)) {
        return Err(Error::param("k/n ratios must lie in (0, 1)"));
    }
    if n_grid.iter().any(|&n| n < 2) {
        return Err(Error::param("Barabasi-Albert sizes must be at least 2"));
    }
    let cells: Vec<(f64, usize)> = k_ratio_grid
        .iter()
        .flat_map(|&r| n_grid.iter().map(move |&n| (r, n)))
        .collect();
    cells
        .iter()
        .map(|&(k_ratio, n)| {
            let m = ba_attachment(n, k_ratio);
            let per_seed: Vec<(f64, f64)> = seeds
                .par_iter()
                .map(|&seed| {
                    let spec = GenSpec::new(
                        Family::BarabasiAlbert {
                            n,
                            m,
                            seed_clique: None,
                        },
                        seed,
                    );
                    let set = CentralitySet::<f64>::compute(&spec.generate()?);
                    Ok((set.ksi_normalized.mean()?, set.ksi.mean()?))
                })
                .collect::<Result<_>>()?;
            let s = seeds.len() as f64;
            Ok(BaCell {
                n,
                k_ratio,
                m,
                xi_hat_avg: per_seed.iter().map(|x| x.0).sum::<f64>() / s,
                xi_avg: per_seed.iter().map(|x| x.1).sum::<f64>() / s,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_vector() {
        let s = summarize(&[2.0f64; 7], 10).unwrap();
        assert_eq!(s.variance, 0.0);
        assert_eq!(s.skewness, 0.0);
        assert_eq!(s.histogram.counts, vec![7]);
        assert_eq!(
            shape_classify(&s, ShapeThresholds::default()).unwrap(),
            Shape::Centered
        );
    }

    #[test]
    fn right_tail() {
        let s = summarize(&[1.0f64, 1.0, 1.0, 10.0], 3).unwrap();
        assert!(s.skewness > 0.0);
        assert_eq!(s.histogram.counts.iter().sum::<usize>(), 4);
        assert_eq!(s.histogram.counts, vec![3, 0, 1]);
        assert_eq!(s.histogram.edges.first(), Some(&1.0));
        assert_eq!(s.histogram.edges.last(), Some(&10.0));
    }

    #[test]
    fn symmetric_is_centered() {
        let s = summarize(&[1.0f64, 2.0, 3.0, 4.0, 5.0], 5).unwrap();
        assert!(s.skewness.abs() < 1e-12);
        assert_eq!(
            shape_classify(&s, ShapeThresholds::default()).unwrap(),
            Shape::Centered
        );
        assert_eq!(s.variance, 2.5);
    }

    #[test]
    fn errors() {
        assert!(summarize::<f64>(&[], 3).is_err());
        assert!(summarize(&[1.0f64], 0).is_err());
        let s = summarize(&[1.0f64, 2.0], 2).unwrap();
        assert!(shape_classify(&s, ShapeThresholds::default()).is_err());
    }

    #[test]
    fn generic_over_f32() {
        let s = summarize(&[1.0f32, 2.0, 6.0], 2).unwrap();
        assert_eq!(s.mean, 3.0);
    }

    #[test]
    fn ratio_series_at_zero_is_one() {
        let pts = ratio_series_ws(40, 3, &[0.0], &[1, 2]).unwrap();
        assert!((pts[0].xi_ratio - 1.0).abs() < 1e-12);
        assert!((pts[0].xi_hat_ratio - 1.0).abs() < 1e-12);
        assert!(ratio_series_ws(40, 3, &[1.2], &[1]).is_err());
    }

    #[test]
    fn single_ba_cell() {
        let rows = ba_size_invariance(&[60], &[0.1], &[3]).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].m, 6);
    }
}
