//! Acceptance criteria, one verdict per criterion.
//!
//! `tests/acceptance.rs` runs them and prints the verdict lines; see
//! [`criteria`] for the list. Criteria 8 and 9 share one cache of the
//! 4000-node networks through [`Networks`].

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use clap::Parser;
use ksi_core::analytic::{printed, sparse_gap};
use ksi_core::centrality::{
    all_node_counts, ksi_normalized_vector, ksi_normalized_via_laplacian, ksi_vector,
    ksi_via_adjacency_matrix, laplacian_triple_sums, DenseLimit,
};
use ksi_core::generators::erdos_renyi;
use ksi_core::montecarlo::er_montecarlo;
use ksi_core::spectral::SpectralOptions;
use ksi_core::stats::{ba_size_invariance, ratio_series_ws, NetworkReport, DEFAULT_BINS};
use ksi_core::{
    analytic_centrality, network_report, verify_cheeger_bounds, verify_lambda2_bound, Family,
    FamilyParams, GenSpec, Graph, GraphRng, Rational, Shape, ShapeThresholds,
};

// Tolerances and sizes, as pinned by the acceptance criteria.
const FAMILY_TOL: f64 = 1e-12;
const PATH_TOL: f64 = 1e-9;
const MC_Z: f64 = 3.0;
const MC_SAMPLES: usize = 500;
const SPARSE_C: f64 = 50.0;
const LAMBDA2_TOL: f64 = 1e-6;
const COLLAPSE_SPREAD: f64 = 0.15;
const BA_SPREAD: f64 = 0.10;
const TABLE_FLAG: f64 = 0.15;
const SKEW_LIMIT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Reported,
}

pub struct Outcome {
    pub verdict: Verdict,
    pub summary: String,
    pub details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Outcome {
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            summary: summary.into(),
            details: Vec::new(),
        }
    }

    fn detail(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }
}

fn to_f64(r: &Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn spread(values: &[f64]) -> (f64, f64) {
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let min = values.iter().cloned().fold(f64::MAX, f64::min);
    (min, max)
}

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
}

fn from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e),
    )
    .unwrap()
}

fn family_grid() -> Vec<FamilyParams> {
    let mut grid = Vec::new();
    grid.extend((1..=50).map(|n| FamilyParams::Star { n }));
    for n in 1..=10 {
        grid.extend((2..=8).map(|k| FamilyParams::Windmill { n, k }));
    }
    grid.extend((3..=60).map(|n| FamilyParams::Wheel { n }));
    grid.extend((3..=40).map(|n| FamilyParams::NestedTriangles { n }));
    for n in 3..=200 {
        grid.extend(
            (1..)
                .take_while(|k| 2 * k < n)
                .map(|k| FamilyParams::RingLattice { n, k }),
        );
    }
    grid
}

fn family_name(p: &FamilyParams) -> &'static str {
    match p {
        FamilyParams::Star { .. } => "star",
        FamilyParams::Windmill { .. } => "windmill",
        FamilyParams::Wheel { .. } => "wheel",
        FamilyParams::NestedTriangles { .. } => "nested_triangles",
        FamilyParams::RingLattice { .. } => "ring_lattice",
    }
}

/// Instances, mismatching instances, mismatch kinds and the first mismatch
/// of one family.
type FamilyTally = (usize, usize, BTreeMap<&'static str, usize>, Option<String>);

fn c1_families() -> Outcome {
    let grid = family_grid();
    let mut by_family: BTreeMap<&str, FamilyTally> = BTreeMap::new();
    let mut derived_mismatch = 0;
    for params in &grid {
        let g = params.build().unwrap();
        let n = g.node_count();
        let counts = all_node_counts(&g);
        let xi: Vec<f64> = counts.iter().map(|c| c.ksi::<f64>()).collect();
        let xi_hat: Vec<f64> = counts.iter().map(|c| c.ksi_normalized::<f64>(n)).collect();
        let xi_avg = xi.iter().sum::<f64>() / n as f64;
        let xi_hat_avg = xi_hat.iter().sum::<f64>() / n as f64;

        let quoted = printed::forms(*params).unwrap();
        let mut kinds = Vec::new();
        let close = |a: f64, b: f64| (a - b).abs() <= FAMILY_TOL;
        if (0..n).any(|i| !close(xi[i], to_f64(&quoted.classes[params.class_of(i)].0))) {
            kinds.push("per-node xi");
        }
        if (0..n).any(|i| !close(xi_hat[i], to_f64(&quoted.classes[params.class_of(i)].1))) {
            kinds.push("per-node xi_hat");
        }
        if !close(xi_avg, to_f64(&quoted.xi_avg)) {
            kinds.push("Xi");
        }
        if !close(xi_hat_avg, to_f64(&quoted.xi_hat_avg)) {
            kinds.push("Xi_hat");
        }

        let derived = analytic_centrality::<f64>(*params).unwrap();
        let derived_ok = (0..n).all(|i| {
            let c = &derived.classes[params.class_of(i)];
            close(xi[i], c.xi) && close(xi_hat[i], c.xi_hat)
        }) && close(xi_avg, derived.xi_avg)
            && close(xi_hat_avg, derived.xi_hat_avg);
        if !derived_ok {
            derived_mismatch += 1;
        }

        let entry = by_family.entry(family_name(params)).or_default();
        entry.0 += 1;
        if !kinds.is_empty() {
            entry.1 += 1;
            for k in &kinds {
                *entry.2.entry(k).or_default() += 1;
            }
            if entry.3.is_none() {
                entry.3 = Some(format!("{params:?}: {}", kinds.join(", ")));
            }
        }
    }
    let bad: usize = by_family.values().map(|e| e.1).sum();
    let mut o = Outcome::new(
        bad == 0,
        format!(
            "{} of {} instances differ from the quoted closed forms (tol {FAMILY_TOL:e})",
            bad,
            grid.len()
        ),
    );
    for (fam, (total, mismatched, kinds, first)) in &by_family {
        let kinds: Vec<String> = kinds.iter().map(|(k, c)| format!("{k} x{c}")).collect();
        let mut line = format!("{fam}: {mismatched}/{total} differ");
        if *mismatched > 0 {
            let _ = write!(
                line,
                " [{}]; first: {}",
                kinds.join(", "),
                first.as_deref().unwrap_or("")
            );
        }
        o.detail(line);
    }
    o.detail(format!(
        "exact derived forms vs computed graphs: {} of {} instances differ",
        derived_mismatch,
        grid.len()
    ));
    o
}

fn c2_paths() -> Outcome {
    let p_grid = [0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
    let mut rng = GraphRng::new(2, 0);
    let (mut dev_xi, mut dev_xi_hat) = (0.0f64, 0.0f64);
    let (mut nodes, mut quoted_ok, mut corrected_ok, mut graphs) = (0usize, 0usize, 0usize, 0usize);
    for _ in 0..200 {
        let n = 2 + rng.below(149);
        let p = p_grid[rng.below(p_grid.len())];
        let g = erdos_renyi(n, p, &mut rng).unwrap();
        let limit = DenseLimit::default();
        let scan_xi = ksi_vector::<f64>(&g).values;
        let scan_xi_hat = ksi_normalized_vector::<f64>(&g).values;
        let adj = ksi_via_adjacency_matrix::<f64>(&g, limit).unwrap().values;
        let lap = ksi_normalized_via_laplacian::<f64>(&g, limit)
            .unwrap()
            .values;
        let triple = laplacian_triple_sums(&g, limit).unwrap();
        let counts = all_node_counts(&g);
        for i in 0..n {
            dev_xi = dev_xi.max((scan_xi[i] - adj[i]).abs());
            dev_xi_hat = dev_xi_hat.max((scan_xi_hat[i] - lap[i]).abs());
            let d = counts[i].degree as i128;
            let b = counts[i].boundary as i128;
            quoted_ok += usize::from(triple[i] == d * d * d + b);
            corrected_ok += usize::from(triple[i] == d * d * d + 2 * d * d + b);
            nodes += 1;
        }
        graphs += 1;
    }
    let paths_agree = dev_xi <= PATH_TOL && dev_xi_hat <= PATH_TOL;
    let mut o = Outcome::new(
        paths_agree && quoted_ok == nodes,
        format!(
            "{graphs} graphs: paths {} (tol {PATH_TOL:e}); quoted integer intermediate d^3 + b matches {quoted_ok} of {nodes} nodes",
            if paths_agree { "agree" } else { "DISAGREE" }
        ),
    );
    o.detail(format!("max |xi scan - xi adjacency| = {dev_xi:e}"));
    o.detail(format!(
        "max |xi_hat scan - xi_hat laplacian| = {dev_xi_hat:e}"
    ));
    o.detail(format!(
        "(L^3)_ii = d^3 + 2 d^2 + b matches {corrected_ok} of {nodes} nodes; the quoted identity holds only where d = 0"
    ));
    o
}

fn c3_montecarlo() -> Outcome {
    let mut all = true;
    let mut details = Vec::new();
    for p in [0.1, 0.3, 0.6] {
        let r = er_montecarlo(50, p, MC_SAMPLES, 3, MC_Z).unwrap();
        let ok = r.pass == Some(true);
        all &= ok;
        let z = |e: &ksi_core::montecarlo::Estimate| {
            e.z.map(|z| format!("{z:+.3}")).unwrap_or("-".into())
        };
        details.push(format!(
            "p={p}: z(E|e|)={} z(Xi_hat)={} z(Xi)={} z(Xi_hat exact form)={} -> {}",
            z(&r.e_boundary),
            z(&r.xi_hat_avg),
            z(&r.xi_avg),
            z(&r.xi_hat_avg_exact),
            if ok { "ok" } else { "outside" }
        ));
    }
    let mut o = Outcome::new(all, format!("n=50, {MC_SAMPLES} samples, |z| <= {MC_Z}"));
    o.details = details;
    o
}

fn c4_sparse() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut fails = Vec::new();
    for n in [1_000usize, 10_000, 100_000] {
        for lambda in [0.5, 2.0, 5.0] {
            let g = sparse_gap(n, lambda).unwrap();
            worst = worst.max(g.constant);
            if g.abs_diff > SPARSE_C / (n as f64 * n as f64) {
                fails.push(format!("n={n} lambda={lambda}: n^2 |gap| = {}", g.constant));
            }
        }
    }
    let mut o = Outcome::new(
        fails.is_empty(),
        format!("max n^2 |gap| = {worst:.4} (limit {SPARSE_C})"),
    );
    o.details = fails;
    o
}

fn c5_lambda2_bound() -> Outcome {
    let opts = SpectralOptions::default();
    let mut rng = GraphRng::new(5, 0);
    let mut violations = 0;
    let mut min_slack = f64::MAX;
    let mut checked = 0;
    let check = |g: &Graph, violations: &mut usize, min_slack: &mut f64| {
        let r = verify_lambda2_bound(g, &opts).unwrap();
        *violations += r.violations.len() + usize::from(!r.average_holds);
        *min_slack = min_slack.min(r.min_slack);
    };
    for _ in 0..100 {
        let n = 2 + rng.below(99);
        let p = rng.next_f64();
        let g = erdos_renyi(n, p, &mut rng).unwrap();
        check(&g, &mut violations, &mut min_slack);
        checked += 1;
    }
    let mut families = Vec::new();
    families.extend((1..=10).map(|n| FamilyParams::Star { n }));
    for n in 1..=4 {
        families.extend((2..=4).map(|k| FamilyParams::Windmill { n, k }));
    }
    families.extend((3..=10).map(|n| FamilyParams::Wheel { n }));
    families.extend((3..=8).map(|n| FamilyParams::NestedTriangles { n }));
    for n in 3..=20 {
        families.extend(
            (1..)
                .take_while(|k| 2 * k < n)
                .map(|k| FamilyParams::RingLattice { n, k }),
        );
    }
    for f in &families {
        check(&f.build().unwrap(), &mut violations, &mut min_slack);
        checked += 1;
    }
    let mut tight_worst: f64 = 0.0;
    for n in 3..=20 {
        let r = verify_lambda2_bound(&complete(n), &opts).unwrap();
        for s in &r.slack {
            tight_worst = tight_worst.max(s.abs());
        }
    }
    let tight = tight_worst <= LAMBDA2_TOL;
    let mut o = Outcome::new(
        violations == 0 && tight,
        format!("{violations} violations of n xi_hat_i >= lambda2 - {LAMBDA2_TOL:e} over {checked} graphs; K_n max |slack| = {tight_worst:e}"),
    );
    o.detail(format!(
        "100 random G(n, p) with n <= 100 plus {} family instances",
        families.len()
    ));
    o.detail(format!("smallest slack seen: {min_slack:e}"));
    o
}

fn c6_cheeger() -> Outcome {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=6usize {
        let pairs = n * (n - 1) / 2;
        graphs.extend((0..(1u32 << pairs)).map(|mask| from_mask(n, mask)));
    }
    let exhaustive = graphs.len();
    let mut rng = GraphRng::new(6, 0);
    for _ in 0..200 {
        let n = 2 + rng.below(15);
        let p = rng.next_f64();
        graphs.push(erdos_renyi(n, p, &mut rng).unwrap());
    }
    let (mut deg_bad, mut norm_bad, mut quoted_bad) = (0usize, 0usize, 0usize);
    for g in &graphs {
        let r = verify_cheeger_bounds(g).unwrap();
        deg_bad += usize::from(!r.degree_bound_holds);
        norm_bad += usize::from(!r.normalized_bound_holds);
        quoted_bad += usize::from(!r.normalized_bound_as_quoted_holds);
    }
    let graphs = graphs.len();
    let mut o = Outcome::new(
        deg_bad == 0 && norm_bad == 0,
        format!("{graphs} graphs: degree bound violated on {deg_bad}, corrected normalized bound on {norm_bad}"),
    );
    o.detail(format!("exhaustive: all {exhaustive} labelled graphs with 2 <= n <= 6; plus 200 random with n <= 16"));
    o.detail(format!(
        "multiplicative normalized bound as quoted (reported only) fails on {quoted_bad} graphs"
    ));
    o
}

fn c7_experiments() -> Outcome {
    let seeds: Vec<u64> = (0..5).collect();
    let grid: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let ns = [200usize, 500, 1000];
    let curves: Vec<_> = ns
        .iter()
        .map(|&n| ratio_series_ws(n, n / 10, &grid, &seeds).unwrap())
        .collect();
    let (mut worst_xi, mut worst_xi_hat): (f64, f64) = (0.0, 0.0);
    for pi in 0..grid.len() {
        let (lo, hi) = spread(&curves.iter().map(|c| c[pi].xi_ratio).collect::<Vec<_>>());
        worst_xi = worst_xi.max(hi / lo - 1.0);
        let (lo, hi) = spread(
            &curves
                .iter()
                .map(|c| c[pi].xi_hat_ratio)
                .collect::<Vec<_>>(),
        );
        worst_xi_hat = worst_xi_hat.max(hi / lo - 1.0);
    }
    let collapse = worst_xi <= COLLAPSE_SPREAD;

    let cells = ba_size_invariance(&ns, &[5.0 / 30.0], &seeds).unwrap();
    let xi_hat: Vec<f64> = cells.iter().map(|c| c.xi_hat_avg).collect();
    let xi: Vec<f64> = cells.iter().map(|c| c.xi_avg).collect();
    let (lo, hi) = spread(&xi_hat);
    let mean = xi_hat.iter().sum::<f64>() / xi_hat.len() as f64;
    let ba_spread = (hi - lo) / mean;
    let monotone = xi.windows(2).all(|w| w[1] > w[0]);
    let invariance = ba_spread < BA_SPREAD && monotone;

    let mut o = Outcome::new(
        collapse && invariance,
        format!(
            "(a) Xi-ratio pointwise spread {:.1}% (limit {:.0}%); (b) Xi_hat spread {:.1}% (limit {:.0}%), Xi monotone: {monotone}",
            100.0 * worst_xi,
            100.0 * COLLAPSE_SPREAD,
            100.0 * ba_spread,
            100.0 * BA_SPREAD
        ),
    );
    o.detail(format!(
        "(a) Watts-Strogatz 2k/n = 0.2, n in {ns:?}, p = 0.1..0.9, 5 seeds; Xi_hat-ratio spread {:.1}%",
        100.0 * worst_xi_hat
    ));
    for c in &cells {
        o.detail(format!(
            "(b) BA n={} m={}: Xi_hat={:.5} Xi={:.3}",
            c.n, c.m, c.xi_hat_avg, c.xi_avg
        ));
    }
    let small = ba_size_invariance(&ns, &[1.0 / 30.0], &seeds).unwrap();
    let v: Vec<f64> = small.iter().map(|c| c.xi_hat_avg).collect();
    let (lo, hi) = spread(&v);
    o.detail(format!(
        "(b, reported only) k/n = 1/30: Xi_hat = {:?}, spread {:.1}%",
        v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>(),
        100.0 * (hi - lo) / (v.iter().sum::<f64>() / v.len() as f64)
    ));
    o
}

/// Reports for the 4000-node networks, shared by criteria 8 and 9.
#[derive(Default)]
pub struct Networks {
    cache: HashMap<(&'static str, u64), NetworkReport>,
}

impl Networks {
    fn family(id: &str) -> Family {
        match id {
            "ER(4000,0.001)" => Family::ErdosRenyi { n: 4000, p: 0.001 },
            "WS(4000,21,0.3)" => Family::WattsStrogatz {
                n: 4000,
                k: 21,
                p: 0.3,
            },
            "WS(4000,10,0.3)" => Family::WattsStrogatz {
                n: 4000,
                k: 10,
                p: 0.3,
            },
            "BA(4000,43)" => Family::BarabasiAlbert {
                n: 4000,
                m: 43,
                seed_clique: None,
            },
            "BHL(4000,500,50)" => Family::Bhl {
                n: 4000,
                n0: 500,
                m: 50,
                triad_probability: ksi_core::generators::DEFAULT_TRIAD_PROBABILITY,
            },
            _ => unreachable!(),
        }
    }

    fn get(&mut self, id: &'static str, seed: u64) -> &NetworkReport {
        self.cache.entry((id, seed)).or_insert_with(|| {
            let g = GenSpec::new(Self::family(id), seed).generate().unwrap();
            network_report(id, &g, DEFAULT_BINS, ShapeThresholds::default()).unwrap()
        })
    }
}

const SEEDS_89: [u64; 3] = [0, 1, 2];

fn c8_table(nets: &mut Networks) -> Outcome {
    let rows = [
        ("BA(4000,43)", 0.0355, 138.9953, true),
        ("WS(4000,21,0.3)", 0.0039, 15.6413, true),
        // "21" read as total lattice degree: half-degree 10
        ("WS(4000,10,0.3)", 0.0039, 15.6413, false),
    ];
    let mut flags = 0;
    let mut details = Vec::new();
    for (id, t_xi_hat, t_xi, counted) in rows {
        let (mut xh, mut x) = (0.0, 0.0);
        for &s in &SEEDS_89 {
            let r = nets.get(id, s);
            xh += r.xi_hat_avg;
            x += r.xi_avg;
        }
        xh /= SEEDS_89.len() as f64;
        x /= SEEDS_89.len() as f64;
        let (d1, d2) = ((xh - t_xi_hat) / t_xi_hat, (x - t_xi) / t_xi);
        let flagged = d1.abs() > TABLE_FLAG || d2.abs() > TABLE_FLAG;
        if flagged && counted {
            flags += 1;
        }
        details.push(format!(
            "{id}{}: Xi_hat={xh:.5} ({:+.1}%), Xi={x:.3} ({:+.1}%){}",
            if counted { "" } else { " [informational]" },
            100.0 * d1,
            100.0 * d2,
            if flagged { "  FLAGGED" } else { "" }
        ));
    }
    Outcome {
        verdict: Verdict::Reported,
        summary: format!(
            "{flags} of 2 table rows deviate by more than {:.0}% (mean of 3 seeds)",
            100.0 * TABLE_FLAG
        ),
        details,
    }
}

fn c9_shapes(nets: &mut Networks) -> Outcome {
    let ids = [
        "ER(4000,0.001)",
        "WS(4000,21,0.3)",
        "BA(4000,43)",
        "BHL(4000,500,50)",
    ];
    let mut bad = 0;
    let mut details = Vec::new();
    for id in ids {
        let mut line = format!("{id}:");
        for &s in &SEEDS_89 {
            let r = nets.get(id, s);
            let ok = r.shape == Some(Shape::Centered) && r.xi.skewness.abs() <= SKEW_LIMIT;
            bad += usize::from(!ok);
            let _ = write!(
                line,
                " seed {s} skew {:+.3} {}",
                r.xi.skewness,
                r.shape.map(|s| s.as_str()).unwrap_or("undefined")
            );
        }
        details.push(line);
    }
    let mut o = Outcome::new(
        bad == 0,
        format!("{bad} of {} (network, seed) xi distributions are not centered (|skew| <= {SKEW_LIMIT})", ids.len() * SEEDS_89.len()),
    );
    o.details = details;
    o
}

/// Runs one command in process with output to `out`, as the binary would.
fn ksi(args: &[&str], threads: usize, out: &Path) {
    let threads = threads.to_string();
    let mut argv = vec!["ksi", "--threads", &threads, "-o", out.to_str().unwrap()];
    argv.extend_from_slice(args);
    let cli = ksi_cli::Cli::try_parse_from(&argv).unwrap();
    if let Err(e) = ksi_cli::execute(&cli) {
        panic!("ksi {args:?} failed: {e}");
    }
}

fn file_contents(path: &Path) -> Vec<(String, Vec<u8>)> {
    if path.is_file() {
        return vec![(String::new(), fs::read(path).unwrap())];
    }
    let mut files: Vec<_> = fs::read_dir(path)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (
                e.file_name().to_string_lossy().into_owned(),
                fs::read(e.path()).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn c10_determinism() -> Outcome {
    let commands: Vec<Vec<&str>> = vec![
        vec![
            "generate",
            "--family",
            "watts_strogatz",
            "--n",
            "300",
            "--k",
            "4",
            "--p",
            "0.3",
            "--seed",
            "11",
        ],
        vec![
            "generate", "--family", "bhl", "--n", "300", "--n0", "60", "--m", "5", "--seed", "4",
        ],
        vec![
            "compute",
            "--family",
            "barabasi_albert",
            "--n",
            "400",
            "--m",
            "4",
            "--seed",
            "5",
        ],
        vec![
            "compute",
            "--family",
            "erdos_renyi",
            "--n",
            "120",
            "--p",
            "0.2",
            "--seed",
            "8",
            "--format",
            "json",
            "--check-paths",
        ],
        vec![
            "stats", "--family", "bhl", "--n", "600", "--n0", "100", "--m", "10", "--seed", "2",
        ],
        vec![
            "montecarlo",
            "--n",
            "40",
            "--p",
            "0.3",
            "--samples",
            "100",
            "--seed",
            "9",
        ],
        vec![
            "verify",
            "--family",
            "erdos_renyi",
            "--n",
            "18",
            "--p",
            "0.4",
            "--seed",
            "1",
        ],
        vec![
            "verify",
            "--family",
            "watts_strogatz",
            "--n",
            "2500",
            "--k",
            "3",
            "--p",
            "0.1",
            "--seed",
            "1",
        ],
        vec!["expected", "--n", "200", "--p", "0.05"],
        vec!["analytic", "--family", "nested_triangles", "--n", "9"],
    ];
    let reproduce: Vec<Vec<&str>> = ["fig3", "fig5"]
        .iter()
        .map(|&exp| {
            vec![
                "reproduce",
                "--experiment",
                exp,
                "--scale",
                "0.1",
                "--seeds",
                "2",
                "--seed",
                "3",
            ]
        })
        .collect();
    let tmp = tempfile::tempdir().unwrap();
    let mut differing = Vec::new();
    for (c, args) in commands.iter().chain(&reproduce).enumerate() {
        let outs: Vec<_> = [1usize, 1, 4]
            .iter()
            .enumerate()
            .map(|(run, &threads)| {
                let out = tmp.path().join(format!("{c}_{run}"));
                ksi(args, threads, &out);
                file_contents(&out)
            })
            .collect();
        if outs[0] != outs[1] || outs[0] != outs[2] {
            differing.push(args.join(" "));
        }
    }
    let total = commands.len() + reproduce.len();
    let mut o = Outcome::new(
        differing.is_empty(),
        format!(
            "{} of {total} commands differ across two runs and --threads 1/4",
            differing.len()
        ),
    );
    o.details = differing;
    o
}

pub type Criterion = fn(&mut Networks) -> Outcome;

/// Every criterion as `(number, name, check)`, in order.
pub fn criteria() -> Vec<(u32, &'static str, Criterion)> {
    vec![
        (1, "closed-form family oracle", |_| c1_families()),
        (2, "three-path equivalence", |_| c2_paths()),
        (3, "G(n,p) expectations vs Monte Carlo", |_| c3_montecarlo()),
        (4, "sparse asymptotics", |_| c4_sparse()),
        (5, "algebraic connectivity bound", |_| c5_lambda2_bound()),
        (6, "Cheeger bounds", |_| c6_cheeger()),
        (7, "WS/BA experiment shape", |_| c7_experiments()),
        (8, "artificial-network table rows", c8_table),
        (9, "shape discrimination", c9_shapes),
        (10, "determinism", |_| c10_determinism()),
    ]
}
