use ksi_core::analytic::{sparse_gap, SparseGap};
use ksi_core::{er_expected, ErExpectation};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::output::{csv_line, emit, fmt_float, json};
use crate::{Cli, Format};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    pub n: usize,
    /// Edge probability
    #[arg(long, conflicts_with = "lambda", required_unless_present = "lambda")]
    pub p: Option<f64>,
    /// Mean degree of a sparse graph; sets p = lambda / n and adds the
    /// leading-order comparison
    #[arg(long)]
    pub lambda: Option<f64>,
}

#[derive(Serialize)]
struct Report {
    expectation: ErExpectation<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sparse: Option<SparseGap>,
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    if args.n == 0 {
        return Err(CliError::usage("--n must be at least 1"));
    }
    let (p, sparse) = match args.lambda {
        Some(l) => (l / args.n as f64, Some(sparse_gap(args.n, l)?)),
        None => (args.p.unwrap(), None),
    };
    let report = Report {
        expectation: er_expected(args.n, p)?,
        sparse,
    };
    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&report)?,
        Format::Csv => {
            let e = &report.expectation;
            let mut out = String::new();
            csv_line(&mut out, &["quantity".into(), "value".into()]);
            let mut rows = vec![
                ("n", e.n as f64),
                ("p", e.p),
                ("e_boundary", e.e_boundary),
                ("xi_hat", e.xi_hat),
                ("xi_hat_exact", e.xi_hat_exact),
                ("xi", e.xi),
                ("Xi_hat", e.xi_hat_avg),
                ("Xi_hat_exact", e.xi_hat_avg_exact),
                ("Xi", e.xi_avg),
            ];
            if let Some(s) = &report.sparse {
                rows.extend([
                    ("lambda", s.lambda),
                    ("Xi_hat_closed", s.xi_hat_avg_closed),
                    ("Xi_hat_leading", s.xi_hat_avg_leading),
                    ("Xi_closed", s.xi_avg_closed),
                    ("Xi_leading", s.xi_avg_leading),
                    ("Xi_hat_abs_diff", s.abs_diff),
                    ("Xi_hat_diff_times_n2", s.constant),
                ]);
            }
            for (k, v) in rows {
                csv_line(&mut out, &[k.to_string(), fmt_float(v)]);
            }
            out
        }
    };
    emit(cli.output.as_deref(), &text)
}
