//! Data behind the experiment figures, written as long-format CSV files plus
//! a `manifest.json` recording every parameter and seed.
//!
//! `--scale` multiplies node counts (and the size-dependent degree
//! parameters of each recipe); rewiring probabilities and ratios stay fixed.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use ksi_core::centrality::CentralitySet;
use ksi_core::stats::{ba_size_invariance, ratio_series_ws, Histogram, DEFAULT_BINS};
use ksi_core::{
    analytic_centrality, network_report, summarize, Family, FamilyParams, GenSpec, ShapeThresholds,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::output::{csv_line, fmt_float, write_file};
use crate::Cli;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Experiment {
    /// Watts-Strogatz histograms of xi/xi_0 and xi_hat/xi_hat_0
    Fig1,
    /// Watts-Strogatz ratio curves for several lattice degrees at n = 500
    Fig2,
    /// Watts-Strogatz ratio curves at 2k/n = 0.2 for several n
    Fig3,
    /// Barabasi-Albert histograms of xi and xi_hat
    Fig4,
    /// Barabasi-Albert averages over an (n, k/n) grid
    Fig5,
    /// BHL histograms of xi and xi_hat
    Fig10,
    /// Average values and shapes of the artificial networks
    #[value(name = "table1-artificial")]
    #[serde(rename = "table1-artificial")]
    Table1Artificial,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    pub experiment: Experiment,
    /// Multiplies node counts; 1 reproduces the full-size recipe
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    /// Number of seeds, counted up from --seed
    #[arg(long, default_value_t = 5)]
    pub seeds: u64,
    /// Histogram bins
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
}

struct Ctx<'a> {
    dir: &'a Path,
    scale: f64,
    seeds: Vec<u64>,
    bins: usize,
    files: Vec<String>,
}

impl Ctx<'_> {
    fn n(&self, full: usize, min: usize) -> usize {
        ((full as f64 * self.scale).round() as usize).max(min)
    }

    fn write(&mut self, name: &str, text: &str) -> Result<()> {
        write_file(&self.dir.join(name), text)?;
        self.files.push(name.to_string());
        Ok(())
    }
}

#[derive(Serialize)]
struct Manifest<'a> {
    command: &'static str,
    experiment: Experiment,
    scale: f64,
    seeds: &'a [u64],
    bins: usize,
    parameters: Value,
    files: &'a [String],
    version: &'static str,
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    let dir = cli
        .output
        .as_deref()
        .ok_or_else(|| CliError::usage("reproduce needs --output <directory>"))?;
    if !(args.scale.is_finite() && args.scale > 0.0) {
        return Err(CliError::usage("--scale must be a positive number"));
    }
    if args.seeds == 0 {
        return Err(CliError::usage("--seeds must be at least 1"));
    }
    if args.bins == 0 {
        return Err(CliError::usage("--bins must be at least 1"));
    }
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut ctx = Ctx {
        dir,
        scale: args.scale,
        seeds: (0..args.seeds).map(|s| cli.seed.wrapping_add(s)).collect(),
        bins: args.bins,
        files: Vec::new(),
    };
    let parameters = match args.experiment {
        Experiment::Fig1 => fig1(&mut ctx)?,
        Experiment::Fig2 => fig2(&mut ctx)?,
        Experiment::Fig3 => fig3(&mut ctx)?,
        Experiment::Fig4 => fig4(&mut ctx)?,
        Experiment::Fig5 => fig5(&mut ctx)?,
        Experiment::Fig10 => fig10(&mut ctx)?,
        Experiment::Table1Artificial => table1(&mut ctx)?,
    };
    let files = ctx.files.clone();
    let manifest = Manifest {
        command: "reproduce",
        experiment: args.experiment,
        scale: args.scale,
        seeds: &ctx.seeds,
        bins: args.bins,
        parameters,
        files: &files,
        version: env!("CARGO_PKG_VERSION"),
    };
    write_file(&dir.join("manifest.json"), &crate::output::json(&manifest)?)?;
    log::info!("wrote {} files to {}", files.len() + 1, dir.display());
    Ok(())
}

fn hist_rows(out: &mut String, key: &[String], measure: &str, h: &Histogram<f64>) {
    for (left, count) in h.edges.iter().zip(&h.counts) {
        let mut row = key.to_vec();
        row.push(measure.to_string());
        row.push(fmt_float(*left));
        row.push(count.to_string());
        csv_line(out, &row);
    }
}

fn header(out: &mut String, cols: &[&str]) {
    csv_line(out, &cols.iter().map(|c| c.to_string()).collect::<Vec<_>>());
}

fn p_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

fn ratio_csv(rows: &[(usize, usize, ksi_core::stats::RatioPoint)]) -> String {
    let mut out = String::new();
    header(&mut out, &["n", "k", "p", "xi_ratio", "xi_hat_ratio"]);
    for (n, k, r) in rows {
        csv_line(
            &mut out,
            &[
                n.to_string(),
                k.to_string(),
                fmt_float(r.p),
                fmt_float(r.xi_ratio),
                fmt_float(r.xi_hat_ratio),
            ],
        );
    }
    out
}

fn fig1(ctx: &mut Ctx) -> Result<Value> {
    let k = ctx.n(50, 1);
    let ns: Vec<usize> = [200, 500].iter().map(|&n| ctx.n(n, 2 * k + 1)).collect();
    let ps = [0.2, 0.6];
    let seed = ctx.seeds[0];
    let mut hist = String::new();
    header(&mut hist, &["n", "p", "measure", "bin_left", "count"]);
    for &n in &ns {
        let base = analytic_centrality::<f64>(FamilyParams::RingLattice { n, k })?;
        let (xi0, xi_hat0) = (base.classes[0].xi, base.classes[0].xi_hat);
        for &p in &ps {
            let g = GenSpec::new(Family::WattsStrogatz { n, k, p }, seed).generate()?;
            let set = CentralitySet::<f64>::compute(&g);
            let key = [n.to_string(), fmt_float(p)];
            let xi: Vec<f64> = set.ksi.values.iter().map(|v| v / xi0).collect();
            let xi_hat: Vec<f64> = set
                .ksi_normalized
                .values
                .iter()
                .map(|v| v / xi_hat0)
                .collect();
            hist_rows(
                &mut hist,
                &key,
                "xi_ratio",
                &summarize(&xi, ctx.bins)?.histogram,
            );
            hist_rows(
                &mut hist,
                &key,
                "xi_hat_ratio",
                &summarize(&xi_hat, ctx.bins)?.histogram,
            );
        }
    }
    ctx.write("fig1_histograms.csv", &hist)?;
    Ok(json!({"family": "watts_strogatz", "n": ns, "k": k, "p": ps, "histogram_seed": seed}))
}

fn fig2(ctx: &mut Ctx) -> Result<Value> {
    let n = ctx.n(500, 4);
    let ks: Vec<usize> = [5, 25, 50, 100]
        .iter()
        .map(|&k| ctx.n(k, 1).min((n - 1) / 2))
        .collect();
    let grid = p_grid();
    let mut rows = Vec::new();
    for &k in &ks {
        for r in ratio_series_ws(n, k, &grid, &ctx.seeds)? {
            rows.push((n, k, r));
        }
    }
    ctx.write("fig2_ratios.csv", &ratio_csv(&rows))?;
    Ok(json!({"family": "watts_strogatz", "n": n, "k": ks, "p": grid}))
}

fn fig3(ctx: &mut Ctx) -> Result<Value> {
    let ns: Vec<usize> = [200, 500, 1000, 2000]
        .iter()
        .map(|&n| ctx.n(n, 10))
        .collect();
    let grid = p_grid();
    let mut rows = Vec::new();
    let mut ks = Vec::new();
    for &n in &ns {
        let k = ((n as f64 * 0.1).round() as usize).max(1);
        ks.push(k);
        for r in ratio_series_ws(n, k, &grid, &ctx.seeds)? {
            rows.push((n, k, r));
        }
    }
    ctx.write("fig3_ratios.csv", &ratio_csv(&rows))?;
    Ok(json!({"family": "watts_strogatz", "n": ns, "k": ks, "two_k_over_n": 0.2, "p": grid}))
}

/// Histograms of one graph per spec plus per-seed summaries.
fn histogram_experiment(
    ctx: &mut Ctx,
    name: &str,
    specs: &[(Vec<String>, Family)],
    key_cols: &[&str],
) -> Result<()> {
    let mut hist = String::new();
    let mut cols = key_cols.to_vec();
    cols.extend(["measure", "bin_left", "count"]);
    header(&mut hist, &cols);
    let mut summary = String::new();
    let mut cols = key_cols.to_vec();
    cols.extend([
        "seed",
        "Xi_hat",
        "Xi",
        "skew_xi",
        "skew_xi_norm",
        "shape_xi",
        "shape_xi_norm",
    ]);
    header(&mut summary, &cols);
    for (key, family) in specs {
        for (si, &seed) in ctx.seeds.iter().enumerate() {
            let g = GenSpec::new(family.clone(), seed).generate()?;
            let r = network_report(name, &g, ctx.bins, ShapeThresholds::default())?;
            if si == 0 {
                hist_rows(&mut hist, key, "xi", &r.xi.histogram);
                hist_rows(&mut hist, key, "xi_hat", &r.xi_hat.histogram);
            }
            let shape = |s: Option<ksi_core::Shape>| {
                s.map(|s| s.as_str()).unwrap_or("undefined").to_string()
            };
            let mut row = key.clone();
            row.extend([
                seed.to_string(),
                fmt_float(r.xi_hat_avg),
                fmt_float(r.xi_avg),
                fmt_float(r.xi.skewness),
                fmt_float(r.xi_hat.skewness),
                shape(r.shape),
                shape(r.shape_xi_hat),
            ]);
            csv_line(&mut summary, &row);
        }
    }
    ctx.write(&format!("{name}_histograms.csv"), &hist)?;
    ctx.write(&format!("{name}_summary.csv"), &summary)?;
    Ok(())
}

fn fig4(ctx: &mut Ctx) -> Result<Value> {
    let ns: Vec<usize> = [200, 500].iter().map(|&n| ctx.n(n, 4)).collect();
    let fractions = [0.25, 0.5, 0.75];
    let mut specs = Vec::new();
    let mut ms = Vec::new();
    for &n in &ns {
        for &f in &fractions {
            let m = ksi_core::stats::ba_attachment(n, f);
            ms.push(m);
            specs.push((
                vec![n.to_string(), m.to_string()],
                Family::BarabasiAlbert {
                    n,
                    m,
                    seed_clique: None,
                },
            ));
        }
    }
    histogram_experiment(ctx, "fig4", &specs, &["n", "m"])?;
    Ok(
        json!({"family": "barabasi_albert", "n": ns, "k_over_n": fractions, "m": ms, "histogram_seed": ctx.seeds[0]}),
    )
}

fn fig5(ctx: &mut Ctx) -> Result<Value> {
    let ns: Vec<usize> = [200, 500, 750, 1000, 1500, 2000]
        .iter()
        .map(|&n| ctx.n(n, 4))
        .collect();
    let ratios: Vec<f64> = (0..8).map(|j| (1 + 4 * j) as f64 / 30.0).collect();
    let cells = ba_size_invariance(&ns, &ratios, &ctx.seeds)?;
    let mut out = String::new();
    header(&mut out, &["k_over_n", "n", "m", "Xi_hat", "Xi"]);
    for c in &cells {
        csv_line(
            &mut out,
            &[
                fmt_float(c.k_ratio),
                c.n.to_string(),
                c.m.to_string(),
                fmt_float(c.xi_hat_avg),
                fmt_float(c.xi_avg),
            ],
        );
    }
    ctx.write("fig5_averages.csv", &out)?;
    Ok(json!({"family": "barabasi_albert", "n": ns, "k_over_n": ratios}))
}

fn fig10(ctx: &mut Ctx) -> Result<Value> {
    let n = ctx.n(4000, 8);
    let n0 = ctx.n(500, 4).min(n);
    let m = ctx.n(50, 1).min((n0 - 1) / 2).max(1);
    let family = Family::Bhl {
        n,
        n0,
        m,
        triad_probability: ksi_core::generators::DEFAULT_TRIAD_PROBABILITY,
    };
    let params = serde_json::to_value(&family)?;
    histogram_experiment(ctx, "fig10", &[(vec![n.to_string()], family)], &["n"])?;
    Ok(json!({"generator": params, "histogram_seed": ctx.seeds[0]}))
}

fn table1(ctx: &mut Ctx) -> Result<Value> {
    let n = ctx.n(4000, 50);
    let networks = [
        (
            "barabasi_albert",
            Family::BarabasiAlbert {
                n,
                m: 43.min(n - 1),
                seed_clique: None,
            },
        ),
        (
            "watts_strogatz",
            Family::WattsStrogatz {
                n,
                k: 21.min((n - 1) / 2),
                p: 0.3,
            },
        ),
        ("erdos_renyi_0.2", Family::ErdosRenyi { n, p: 0.2 }),
        ("erdos_renyi_0.001", Family::ErdosRenyi { n, p: 0.001 }),
    ];
    let mut out = String::new();
    header(
        &mut out,
        &[
            "network",
            "seed",
            "Xi_hat",
            "Xi",
            "n",
            "m",
            "clustering",
            "skew_xi",
            "shape_xi",
            "shape_xi_norm",
        ],
    );
    let mut means = String::new();
    header(&mut means, &["network", "Xi_hat", "Xi", "n", "clustering"]);
    for (id, family) in &networks {
        let (mut xh, mut x, mut c) = (0.0, 0.0, 0.0);
        for &seed in &ctx.seeds {
            let g = GenSpec::new(family.clone(), seed).generate()?;
            let r = network_report(id, &g, ctx.bins, ShapeThresholds::default())?;
            let shape = |s: Option<ksi_core::Shape>| {
                s.map(|s| s.as_str()).unwrap_or("undefined").to_string()
            };
            csv_line(
                &mut out,
                &[
                    id.to_string(),
                    seed.to_string(),
                    fmt_float(r.xi_hat_avg),
                    fmt_float(r.xi_avg),
                    r.n.to_string(),
                    r.m.to_string(),
                    fmt_float(r.clustering_avg),
                    fmt_float(r.xi.skewness),
                    shape(r.shape),
                    shape(r.shape_xi_hat),
                ],
            );
            xh += r.xi_hat_avg;
            x += r.xi_avg;
            c += r.clustering_avg;
        }
        let s = ctx.seeds.len() as f64;
        csv_line(
            &mut means,
            &[
                id.to_string(),
                fmt_float(xh / s),
                fmt_float(x / s),
                n.to_string(),
                fmt_float(c / s),
            ],
        );
    }
    ctx.write("table1_runs.csv", &out)?;
    ctx.write("table1_means.csv", &means)?;
    let families: Vec<Value> = networks
        .iter()
        .map(|(id, f)| Ok(json!({"id": id, "generator": serde_json::to_value(f)?})))
        .collect::<Result<_>>()?;
    Ok(json!({"networks": families}))
}
