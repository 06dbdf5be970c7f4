use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ksi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ksi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn triangle_compute() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tri.txt", "0 1\n1 2\n2 0\n");
    let o = ksi(&["compute", "-i", &f]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("original_label,degree,xi,xi_norm,clustering,boundary_count\n"));
    assert!(out.contains("\n0,2,1,1,1,2\n"));
    assert!(out.contains("# Xi=1 Xi_hat=1 clustering=1 n=3 m=3"));
}

#[test]
fn star_json_with_paths() {
    let dir = tempfile::tempdir().unwrap();
    let edges: String = (1..=5).map(|i| format!("0 {i}\n")).collect();
    let f = write(dir.path(), "star.txt", &edges);
    let o = ksi(&["compute", "-i", &f, "--format", "json", "--check-paths"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["Xi_hat"], 1.0);
    assert_eq!(v["nodes"][0]["xi"], 1.0);
    assert_eq!(v["nodes"][1]["xi"], 5.0);
    assert_eq!(v["paths"]["max_dev_xi"], 0.0);
}

#[test]
fn labels_are_echoed() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "g.txt", "# comment\n10 30\n30 20\n");
    let out = stdout(&ksi(&["compute", "-i", &f, "--measures", "xi"]));
    let rows: Vec<&str> = out.lines().skip(1).take(3).collect();
    // first-appearance order
    assert_eq!(rows, ["10,1,2", "30,2,1", "20,1,2"]);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.txt", "0 1\n1 x\n");
    let o = ksi(&["compute", "-i", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(
        ksi(&["compute", "-i", "/no/such/file"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ksi(&["compute"]).status.code(), Some(2));
    assert_eq!(
        ksi(&["expected", "--n", "10", "--p", "1.5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ksi(&["--threads", "0", "expected", "--n", "3", "--p", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ksi(&["generate", "--family", "havel-hakimi", "--degrees", "3,3,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let args = [
        "generate",
        "--family",
        "watts-strogatz",
        "--n",
        "40",
        "--k",
        "3",
        "--p",
        "0.3",
        "--seed",
        "7",
    ];
    let a = ksi(&args);
    let b = ksi(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("# generator=watts_strogatz n=40 k=3 p=0.3 seed=7\n"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 120);

    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "ws.txt", &text);
    let from_file = stdout(&ksi(&["compute", "-i", &f]));
    let direct = stdout(&ksi(&[
        "compute",
        "--family",
        "watts_strogatz",
        "--n",
        "40",
        "--k",
        "3",
        "--p",
        "0.3",
        "--seed",
        "7",
    ]));
    assert_eq!(from_file, direct);
}

#[test]
fn generate_keeps_isolated_nodes() {
    let o = ksi(&[
        "generate",
        "--family",
        "erdos_renyi",
        "--n",
        "30",
        "--p",
        "0.02",
        "--seed",
        "3",
    ]);
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "er.txt", &stdout(&o));
    let out = stdout(&ksi(&["compute", "-i", &f]));
    assert!(out.contains(" n=30 "), "{out}");
}

#[test]
fn input_and_generator_conflict() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "tri.txt", "0 1\n1 2\n2 0\n");
    let o = ksi(&[
        "compute",
        "-i",
        &f,
        "--family",
        "erdos_renyi",
        "--n",
        "5",
        "--p",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k5: String = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| format!("{i} {j}\n")))
        .collect();
    let f = write(dir.path(), "k5.txt", &k5);
    let v: serde_json::Value = serde_json::from_slice(&ksi(&["verify", "-i", &f]).stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!((v["lambda2_bound"]["spectral"]["lambda2"].as_f64().unwrap() - 5.0).abs() < 1e-9);
    assert!(v["lambda2_bound"]["min_slack"].as_f64().unwrap().abs() < 1e-9);
    assert_eq!(v["cheeger_bounds"]["h_exact"], "3");

    let f = write(dir.path(), "p4.txt", "0 1\n1 2\n2 3\n");
    let v: serde_json::Value = serde_json::from_slice(&ksi(&["verify", "-i", &f]).stdout).unwrap();
    assert_eq!(v["cheeger_bounds"]["h_exact"], "1/2");
    assert_eq!(
        v["cheeger_bounds"]["cheeger"]["witness"],
        serde_json::json!([0, 1])
    );
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_skips_cheeger_beyond_cap() {
    let o = ksi(&[
        "verify",
        "--family",
        "ring_lattice",
        "--n",
        "30",
        "--k",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cheeger_bounds"]["status"], "skipped");
    assert_eq!(v["lambda2_bound"]["status"], "computed");
}

#[test]
fn analytic_reports_quoted_mismatch() {
    let o = ksi(&[
        "analytic", "--family", "windmill", "--n", "3", "--k", "2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["Xi_exact"], "19/7");
    assert_eq!(v["Xi_hat_exact"], "23/35");
    assert_eq!(v["quoted_forms_match"], false);
    let o = ksi(&["analytic", "--family", "star", "--n", "99"]);
    assert!(stdout(&o).contains("Xi_hat_exact=1 "));
}

#[test]
fn montecarlo_edge_cases() {
    let out = stdout(&ksi(&[
        "montecarlo",
        "--n",
        "10",
        "--p",
        "1",
        "--samples",
        "4",
    ]));
    assert!(out.contains("Xi,1,1,0,,pass"), "{out}");
    let out = stdout(&ksi(&[
        "montecarlo",
        "--n",
        "10",
        "--p",
        "0.5",
        "--samples",
        "1",
    ]));
    assert!(out.contains("verdict=n/a"), "{out}");
    let v: serde_json::Value = serde_json::from_slice(
        &ksi(&[
            "montecarlo",
            "--n",
            "50",
            "--p",
            "0.2",
            "--samples",
            "300",
            "--format",
            "json",
        ])
        .stdout,
    )
    .unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn expected_sparse_gap() {
    let out = stdout(&ksi(&["expected", "--n", "1000", "--lambda", "3"]));
    let c: f64 = out
        .lines()
        .find_map(|l| l.strip_prefix("Xi_hat_diff_times_n2,"))
        .unwrap()
        .parse()
        .unwrap();
    assert!(c.abs() < 50.0);
}

#[test]
fn stats_histograms_written() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = format!("{}/h_", dir.path().display());
    let o = ksi(&[
        "stats",
        "--family",
        "erdos_renyi",
        "--n",
        "300",
        "--p",
        "0.1",
        "--bins",
        "10",
        "--hist-prefix",
        &prefix,
        "--id",
        "er",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("er,"));
    let h = fs::read_to_string(dir.path().join("h_xi.csv")).unwrap();
    assert_eq!(h.lines().count(), 11);
    let total: usize = h
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse::<usize>().unwrap())
        .sum();
    assert_eq!(total, 300);
}

#[test]
fn reproduce_unknown_id_lists_valid_ones() {
    let dir = tempfile::tempdir().unwrap();
    let o = ksi(&[
        "reproduce",
        "--experiment",
        "fig9",
        "-o",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(
        err.contains("table1-artificial") && err.contains("fig10"),
        "{err}"
    );
}

#[test]
fn reproduce_scaled_fig3() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = ksi(&[
        "reproduce",
        "--experiment",
        "fig3",
        "--scale",
        "0.25",
        "--seeds",
        "1",
        "-o",
        d,
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let m: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(m["experiment"], "fig3");
    assert_eq!(m["parameters"]["n"], serde_json::json!([50, 125, 250, 500]));
    let csv = fs::read_to_string(dir.path().join("fig3_ratios.csv")).unwrap();
    assert!(csv.contains("\n50,5,0,1,1\n"));
    assert_eq!(csv.lines().count(), 1 + 4 * 11);
}

#[test]
fn reproduce_needs_output_dir() {
    assert_eq!(
        ksi(&["reproduce", "--experiment", "fig1"]).status.code(),
        Some(2)
    );
}
