//! Where a command's graph comes from: an edge-list file or a generator.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use ksi_core::generators::DEFAULT_TRIAD_PROBABILITY;
use ksi_core::{parse_edge_list, Family, GenSpec, Graph};
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum FamilyName {
    #[value(alias = "erdos-renyi")]
    ErdosRenyi,
    #[value(alias = "ring-lattice")]
    RingLattice,
    #[value(alias = "watts-strogatz")]
    WattsStrogatz,
    #[value(alias = "barabasi-albert")]
    BarabasiAlbert,
    #[value(alias = "havel-hakimi")]
    HavelHakimi,
    Bhl,
}

/// Generator parameters as flags. Which ones are required depends on the
/// family.
#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// Generator family
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// Node count
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge or rewiring probability
    #[arg(long)]
    pub p: Option<f64>,
    /// Ring half-degree (each node links to k neighbors per side)
    #[arg(long)]
    pub k: Option<usize>,
    /// Edges per new node (Barabási–Albert, BHL)
    #[arg(long)]
    pub m: Option<usize>,
    /// Initial node count (BHL)
    #[arg(long)]
    pub n0: Option<usize>,
    /// Comma-separated degree sequence (Havel–Hakimi)
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    /// Triad-closure probability (BHL)
    #[arg(long, default_value_t = DEFAULT_TRIAD_PROBABILITY)]
    pub triad_probability: f64,
    /// Seed clique size (Barabási–Albert; default m)
    #[arg(long)]
    pub seed_clique: Option<usize>,
    /// JSON generator spec `{"family": .., "params": {..}, "seed": ..}`
    #[arg(long, conflicts_with = "family")]
    pub spec: Option<PathBuf>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: FamilyName) -> Result<T> {
    v.ok_or_else(|| {
        let name = family.to_possible_value().unwrap();
        CliError::usage(format!(
            "--{flag} is required for --family {}",
            name.get_name()
        ))
    })
}

impl GenArgs {
    pub fn is_set(&self) -> bool {
        self.family.is_some() || self.spec.is_some()
    }

    pub fn to_spec(&self, seed: u64) -> Result<GenSpec> {
        if let Some(path) = &self.spec {
            let text = read_text(path)?;
            return serde_json::from_str(&text).map_err(|e| {
                CliError::usage(format!("{}: invalid generator spec: {e}", path.display()))
            });
        }
        let f = self
            .family
            .ok_or_else(|| CliError::usage("either --input, --family or --spec is required"))?;
        let family = match f {
            FamilyName::ErdosRenyi => Family::ErdosRenyi {
                n: need(self.n, "n", f)?,
                p: need(self.p, "p", f)?,
            },
            FamilyName::RingLattice => Family::RingLattice {
                n: need(self.n, "n", f)?,
                k: need(self.k, "k", f)?,
            },
            FamilyName::WattsStrogatz => Family::WattsStrogatz {
                n: need(self.n, "n", f)?,
                k: need(self.k, "k", f)?,
                p: need(self.p, "p", f)?,
            },
            FamilyName::BarabasiAlbert => Family::BarabasiAlbert {
                n: need(self.n, "n", f)?,
                m: need(self.m, "m", f)?,
                seed_clique: self.seed_clique,
            },
            FamilyName::HavelHakimi => Family::HavelHakimi {
                degrees: self.degrees.clone().ok_or_else(|| {
                    CliError::usage("--degrees is required for --family havel_hakimi")
                })?,
            },
            FamilyName::Bhl => Family::Bhl {
                n: need(self.n, "n", f)?,
                n0: need(self.n0, "n0", f)?,
                m: need(self.m, "m", f)?,
                triad_probability: self.triad_probability,
            },
        };
        Ok(GenSpec::new(family, seed))
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// A loaded graph plus the label each dense id prints as.
pub struct Loaded {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub id: String,
}

pub fn load_file(path: &Path) -> Result<Loaded> {
    let text = read_text(path)?;
    let lg = parse_edge_list(&text).map_err(|source| CliError::Input {
        path: path.to_path_buf(),
        source,
    })?;
    let norm = lg.normalization;
    if !norm.is_clean() {
        log::warn!(
            "{}: dropped {} self-loops and {} duplicate edges",
            path.display(),
            norm.self_loops,
            norm.duplicates
        );
    }
    let id = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into());
    Ok(Loaded {
        graph: lg.graph,
        labels: lg.labels,
        id,
    })
}

pub fn load(input: Option<&Path>, gen: &GenArgs, seed: u64) -> Result<Loaded> {
    match input {
        Some(path) => {
            if gen.is_set() {
                return Err(CliError::usage(
                    "--input cannot be combined with generator flags",
                ));
            }
            load_file(path)
        }
        None => {
            let spec = gen.to_spec(seed)?;
            let graph = spec.generate()?;
            log::info!(
                "generated {} ({} nodes, {} edges)",
                spec.describe(),
                graph.node_count(),
                graph.edge_count()
            );
            let labels = (0..graph.node_count() as u64).collect();
            Ok(Loaded {
                graph,
                labels,
                id: spec.family.describe(),
            })
        }
    }
}
