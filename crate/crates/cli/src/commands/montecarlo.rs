use ksi_core::montecarlo::{er_montecarlo, Estimate, DEFAULT_Z_LIMIT};

use crate::error::Result;
use crate::output::{csv_line, emit, fmt_float, fmt_opt, json};
use crate::{Cli, Format};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Largest accepted |z|
    #[arg(long, default_value_t = DEFAULT_Z_LIMIT)]
    pub z_limit: f64,
}

fn verdict(v: Option<bool>) -> String {
    match v {
        Some(true) => "pass".into(),
        Some(false) => "fail".into(),
        None => "n/a".into(),
    }
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    let r = er_montecarlo(args.n, args.p, args.samples, cli.seed, args.z_limit)?;
    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&r)?,
        Format::Csv => {
            let mut out = String::new();
            csv_line(
                &mut out,
                &["quantity", "expected", "mean", "std_error", "z", "verdict"].map(String::from),
            );
            let rows: [(&str, &Estimate); 4] = [
                ("e_boundary", &r.e_boundary),
                ("Xi_hat", &r.xi_hat_avg),
                ("Xi_hat_exact", &r.xi_hat_avg_exact),
                ("Xi", &r.xi_avg),
            ];
            for (name, e) in rows {
                csv_line(
                    &mut out,
                    &[
                        name.to_string(),
                        fmt_float(e.expected),
                        fmt_float(e.mean),
                        fmt_opt(e.std_error),
                        fmt_opt(e.z),
                        verdict(e.pass),
                    ],
                );
            }
            out.push_str(&format!(
                "# n={} p={} samples={} seed={} z_limit={} verdict={}\n",
                r.n,
                fmt_float(r.p),
                r.samples,
                r.seed,
                fmt_float(r.z_limit),
                verdict(r.pass)
            ));
            out
        }
    };
    emit(cli.output.as_deref(), &text)
}
