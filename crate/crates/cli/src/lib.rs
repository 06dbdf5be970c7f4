//! `ksi`: ksi-centrality from the command line.
//!
//! The binary is a thin wrapper over [`execute`]; the library form lets
//! other crates drive commands in process.

pub mod commands;
pub mod error;
pub mod output;
pub mod source;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ksi",
    version,
    about = "Ksi-centrality analytics for undirected graphs"
)]
pub struct Cli {
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Output file (a directory for `reproduce`); stdout when omitted
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads; results do not depend on it
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Random seed
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// More log output on stderr (repeatable)
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-node ksi, normalized ksi, clustering and boundary counts
    Compute(commands::compute::Args),
    /// Write a generated graph as an edge list
    Generate(commands::generate::Args),
    /// Closed-form values for a special graph family
    Analytic(commands::analytic::Args),
    /// Closed-form expectations over G(n, p)
    Expected(commands::expected::Args),
    /// Check the algebraic-connectivity and Cheeger-number bounds
    Verify(commands::verify::Args),
    /// Distribution summary and shape of both ksi measures
    Stats(commands::stats::Args),
    /// Monte-Carlo estimates over G(n, p) against the closed forms
    Montecarlo(commands::montecarlo::Args),
    /// Regenerate the data behind one experiment
    Reproduce(commands::reproduce::Args),
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Compute(a) => commands::compute::run(cli, a),
        Command::Generate(a) => commands::generate::run(cli, a),
        Command::Analytic(a) => commands::analytic::run(cli, a),
        Command::Expected(a) => commands::expected::run(cli, a),
        Command::Verify(a) => commands::verify::run(cli, a),
        Command::Stats(a) => commands::stats::run(cli, a),
        Command::Montecarlo(a) => commands::montecarlo::run(cli, a),
        Command::Reproduce(a) => commands::reproduce::run(cli, a),
    }
}

/// Runs `cli` on a pool of `--threads` workers, or on the global pool.
pub fn execute(cli: &Cli) -> Result<()> {
    match cli.threads {
        Some(0) => Err(CliError::usage("--threads must be at least 1")),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| run(cli)),
            Err(e) => Err(CliError::usage(format!("cannot start {t} threads: {e}"))),
        },
        None => run(cli),
    }
}
