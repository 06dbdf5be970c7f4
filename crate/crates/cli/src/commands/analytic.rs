use clap::ValueEnum;
use ksi_core::analytic::printed;
use ksi_core::{analytic_centrality, Exact, FamilyParams, Rational};
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::output::{csv_line, emit, fmt_float, json};
use crate::{Cli, Format};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    Star,
    Windmill,
    Wheel,
    #[value(alias = "nested-triangles")]
    NestedTriangles,
    #[value(alias = "ring-lattice")]
    RingLattice,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Size parameter: leaves, blades, rim nodes, triangles or ring size
    #[arg(long)]
    pub n: usize,
    /// Blade size (windmill) or half-degree (ring lattice)
    #[arg(long)]
    pub k: Option<usize>,
}

/// `p/q`, or `p` for integers.
fn ratio_string<T: std::fmt::Display>(r: &T) -> String {
    r.to_string()
}

#[derive(Serialize)]
struct ClassRow {
    class: &'static str,
    count: usize,
    degree: u64,
    boundary: u64,
    xi: f64,
    xi_hat: f64,
    xi_exact: String,
    xi_hat_exact: String,
    quoted_xi: String,
    quoted_xi_hat: String,
}

#[derive(Serialize)]
struct Report {
    params: FamilyParams,
    nodes: usize,
    #[serde(rename = "Xi")]
    xi_avg: f64,
    #[serde(rename = "Xi_hat")]
    xi_hat_avg: f64,
    #[serde(rename = "Xi_exact")]
    xi_avg_exact: String,
    #[serde(rename = "Xi_hat_exact")]
    xi_hat_avg_exact: String,
    /// The commonly quoted closed forms, which hold only on part of the
    /// parameter range.
    #[serde(rename = "quoted_Xi")]
    quoted_xi_avg: String,
    #[serde(rename = "quoted_Xi_hat")]
    quoted_xi_hat_avg: String,
    quoted_forms_match: bool,
    classes: Vec<ClassRow>,
}

fn params(args: &Args) -> Result<FamilyParams> {
    let k = || {
        args.k
            .ok_or_else(|| CliError::usage("--k is required for this family"))
    };
    Ok(match args.family {
        FamilyName::Star => FamilyParams::Star { n: args.n },
        FamilyName::Windmill => FamilyParams::Windmill { n: args.n, k: k()? },
        FamilyName::Wheel => FamilyParams::Wheel { n: args.n },
        FamilyName::NestedTriangles => FamilyParams::NestedTriangles { n: args.n },
        FamilyName::RingLattice => FamilyParams::RingLattice { n: args.n, k: k()? },
    })
}

pub fn run(cli: &Cli, args: &Args) -> Result<()> {
    let p = params(args)?;
    let exact = analytic_centrality::<Exact>(p)?;
    let float = analytic_centrality::<f64>(p)?;
    let quoted = printed::forms(p)?;
    let exact_i128 = analytic_centrality::<Rational>(p)?;
    let matches = exact_i128.xi_avg == quoted.xi_avg
        && exact_i128.xi_hat_avg == quoted.xi_hat_avg
        && exact_i128
            .classes
            .iter()
            .zip(&quoted.classes)
            .all(|(c, (x, xh))| &c.xi == x && &c.xi_hat == xh);

    let classes = exact
        .classes
        .iter()
        .zip(&float.classes)
        .zip(&quoted.classes)
        .map(|((e, f), (qx, qxh))| ClassRow {
            class: e.label,
            count: e.count,
            degree: e.degree,
            boundary: e.boundary,
            xi: f.xi,
            xi_hat: f.xi_hat,
            xi_exact: ratio_string(&e.xi),
            xi_hat_exact: ratio_string(&e.xi_hat),
            quoted_xi: ratio_string(qx),
            quoted_xi_hat: ratio_string(qxh),
        })
        .collect();
    let report = Report {
        params: p,
        nodes: exact.nodes,
        xi_avg: float.xi_avg,
        xi_hat_avg: float.xi_hat_avg,
        xi_avg_exact: ratio_string(&exact.xi_avg),
        xi_hat_avg_exact: ratio_string(&exact.xi_hat_avg),
        quoted_xi_avg: ratio_string(&quoted.xi_avg),
        quoted_xi_hat_avg: ratio_string(&quoted.xi_hat_avg),
        quoted_forms_match: matches,
        classes,
    };

    let text = match cli.format.unwrap_or(Format::Csv) {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut out = String::new();
            csv_line(
                &mut out,
                &[
                    "class",
                    "count",
                    "degree",
                    "boundary",
                    "xi",
                    "xi_hat",
                    "xi_exact",
                    "xi_hat_exact",
                ]
                .map(String::from),
            );
            for c in &report.classes {
                csv_line(
                    &mut out,
                    &[
                        c.class.to_string(),
                        c.count.to_string(),
                        c.degree.to_string(),
                        c.boundary.to_string(),
                        fmt_float(c.xi),
                        fmt_float(c.xi_hat),
                        c.xi_exact.clone(),
                        c.xi_hat_exact.clone(),
                    ],
                );
            }
            out.push_str(&format!(
                "# Xi={} Xi_hat={} Xi_exact={} Xi_hat_exact={} nodes={}\n",
                fmt_float(report.xi_avg),
                fmt_float(report.xi_hat_avg),
                report.xi_avg_exact,
                report.xi_hat_avg_exact,
                report.nodes
            ));
            out.push_str(&format!(
                "# quoted Xi={} Xi_hat={} match={}\n",
                report.quoted_xi_avg, report.quoted_xi_hat_avg, report.quoted_forms_match
            ));
            out
        }
    };
    emit(cli.output.as_deref(), &text)
}
