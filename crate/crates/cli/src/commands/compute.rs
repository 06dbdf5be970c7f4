use std::path::PathBuf;

use clap::ValueEnum;
use ksi_core::{ksi_normalized_via_laplacian, ksi_via_adjacency_matrix, CentralitySet, DenseLimit};
use serde::Serialize;

use crate::error::Result;
use crate::output::{csv_line, emit, fmt_float, json};
use crate::source::{load, GenArgs};
use crate::{Cli, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Column {
    Xi,
    XiNorm,
    Clustering,
    BoundaryCount,
}

impl Column {
    fn name(self) -> &'static str {
        match self {
            Column::Xi => "xi",
            Column::XiNorm => "xi_norm",
            Column::Clustering => "clustering",
            Column::BoundaryCount => "boundary_count",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Edge list: one `u v` pair per line, `#` comments
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Columns to print after `original_label,degree`
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        default_value = "xi,xi_norm,clustering,boundary_count"
    )]
    pub measures: Vec<Column>,
    /// Also run the adjacency- and Laplacian-matrix paths and report their
    /// largest deviation from the scan
    #[arg(long)]
    pub check_paths: bool,
    #[command(flatten)]
    pub gen: GenArgs,
}

#[derive(Serialize)]
struct NodeRow {
    original_label: u64,
    degree: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    xi_norm: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clustering: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary_count: Option<u64>,
}

#[derive(Serialize)]
struct PathCheck {
    max_dev_xi: f64,
    max_dev_xi_norm: f64,
}

#[derive(Serialize)]
struct Report {
    n: usize,
    m: usize,
    #[serde(rename = "Xi")]
    xi: f64,
    #[serde(rename = "Xi_hat")]
    xi_hat: f64,
    clustering: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<PathCheck>,
    nodes: Vec<NodeRow>,
}

fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    let loaded = load(args.input.as_deref(), &args.gen, cli.seed)?;
    let g = &loaded.graph;
    let set = CentralitySet::<f64>::compute(g);
    let has = |c: Column| args.measures.contains(&c);

    let paths = if args.check_paths {
        let adj = ksi_via_adjacency_matrix::<f64>(g, DenseLimit::default())?;
        let lap = ksi_normalized_via_laplacian::<f64>(g, DenseLimit::default())?;
        Some(PathCheck {
            max_dev_xi: max_dev(&set.ksi.values, &adj.values),
            max_dev_xi_norm: max_dev(&set.ksi_normalized.values, &lap.values),
        })
    } else {
        None
    };

    let rows: Vec<NodeRow> = (0..g.node_count())
        .map(|i| NodeRow {
            original_label: loaded.labels[i],
            degree: set.counts[i].degree,
            xi: has(Column::Xi).then(|| set.ksi.values[i]),
            xi_norm: has(Column::XiNorm).then(|| set.ksi_normalized.values[i]),
            clustering: has(Column::Clustering).then(|| set.clustering.values[i]),
            boundary_count: has(Column::BoundaryCount).then(|| set.counts[i].boundary),
        })
        .collect();
    let report = Report {
        n: g.node_count(),
        m: g.edge_count(),
        xi: set.ksi.mean()?,
        xi_hat: set.ksi_normalized.mean()?,
        clustering: set.clustering.mean()?,
        paths,
        nodes: rows,
    };

    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut out = String::new();
            let mut header = vec!["original_label".to_string(), "degree".to_string()];
            header.extend(args.measures.iter().map(|c| c.name().to_string()));
            csv_line(&mut out, &header);
            for r in &report.nodes {
                let mut f = vec![r.original_label.to_string(), r.degree.to_string()];
                for c in &args.measures {
                    f.push(match c {
                        Column::Xi => fmt_float(r.xi.unwrap()),
                        Column::XiNorm => fmt_float(r.xi_norm.unwrap()),
                        Column::Clustering => fmt_float(r.clustering.unwrap()),
                        Column::BoundaryCount => r.boundary_count.unwrap().to_string(),
                    });
                }
                csv_line(&mut out, &f);
            }
            out.push_str(&format!(
                "# Xi={} Xi_hat={} clustering={} n={} m={}\n",
                fmt_float(report.xi),
                fmt_float(report.xi_hat),
                fmt_float(report.clustering),
                report.n,
                report.m
            ));
            if let Some(p) = &report.paths {
                out.push_str(&format!(
                    "# paths max_dev_xi={} max_dev_xi_norm={}\n",
                    fmt_float(p.max_dev_xi),
                    fmt_float(p.max_dev_xi_norm)
                ));
            }
            out
        }
    };
    emit(cli.output.as_deref(), &text)
}
