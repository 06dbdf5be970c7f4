use std::path::PathBuf;

use ksi_core::stats::{Histogram, DEFAULT_BINS};
use ksi_core::{network_report, DistributionSummary, ShapeThresholds};

use crate::error::{CliError, Result};
use crate::output::{csv_line, emit, fmt_float, json, write_file};
use crate::source::{load, GenArgs};
use crate::{Cli, Format};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Edge list file; otherwise use the generator flags
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Histogram bins
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    /// Skewness beyond +-this value counts as skewed
    #[arg(long, default_value_t = 0.5)]
    pub skew_threshold: f64,
    /// Network name in the report; defaults to the file stem or generator
    #[arg(long)]
    pub id: Option<String>,
    /// Also write `<prefix>xi.csv` and `<prefix>xi_norm.csv` histograms
    #[arg(long)]
    pub hist_prefix: Option<String>,
    #[command(flatten)]
    pub gen: GenArgs,
}

pub fn histogram_csv(h: &Histogram<f64>) -> String {
    let mut out = String::new();
    csv_line(&mut out, &["bin_left".into(), "count".into()]);
    for (left, count) in h.edges.iter().zip(&h.counts) {
        csv_line(&mut out, &[fmt_float(*left), count.to_string()]);
    }
    out
}

pub fn summary_fields(measure: &str, s: &DistributionSummary<f64>, shape: &str) -> Vec<String> {
    vec![
        measure.to_string(),
        s.count.to_string(),
        fmt_float(s.mean),
        fmt_float(s.variance),
        fmt_float(s.skewness),
        fmt_float(s.min),
        fmt_float(s.max),
        shape.to_string(),
    ]
}

pub const SUMMARY_HEADER: [&str; 8] = [
    "measure", "count", "mean", "variance", "skewness", "min", "max", "shape",
];

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    if !(args.skew_threshold >= 0.0) {
        return Err(CliError::usage("--skew-threshold must be non-negative"));
    }
    let loaded = load(args.input.as_deref(), &args.gen, cli.seed)?;
    let id = args.id.clone().unwrap_or(loaded.id);
    let t = ShapeThresholds {
        right: args.skew_threshold,
        left: -args.skew_threshold,
    };
    let r = network_report(&id, &loaded.graph, args.bins, t)?;

    if let Some(prefix) = &args.hist_prefix {
        write_file(
            &PathBuf::from(format!("{prefix}xi.csv")),
            &histogram_csv(&r.xi.histogram),
        )?;
        write_file(
            &PathBuf::from(format!("{prefix}xi_norm.csv")),
            &histogram_csv(&r.xi_hat.histogram),
        )?;
    }

    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&r)?,
        Format::Csv => {
            let shape = |s: Option<ksi_core::Shape>| s.map(|s| s.as_str()).unwrap_or("undefined");
            let mut out = String::new();
            csv_line(
                &mut out,
                &["network", "Xi_hat", "Xi", "n", "m", "clustering"].map(String::from),
            );
            csv_line(
                &mut out,
                &[
                    r.id.clone(),
                    fmt_float(r.xi_hat_avg),
                    fmt_float(r.xi_avg),
                    r.n.to_string(),
                    r.m.to_string(),
                    fmt_float(r.clustering_avg),
                ],
            );
            out.push('\n');
            csv_line(&mut out, &SUMMARY_HEADER.map(String::from));
            csv_line(&mut out, &summary_fields("xi", &r.xi, shape(r.shape)));
            csv_line(
                &mut out,
                &summary_fields("xi_norm", &r.xi_hat, shape(r.shape_xi_hat)),
            );
            out
        }
    };
    emit(cli.output.as_deref(), &text)
}
