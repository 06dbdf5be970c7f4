use ksi_core::generators::{havel_hakimi, ring_lattice};
use ksi_core::{write_edge_list, Error, Family, GenSpec, Graph};
use proptest::prelude::*;

fn check_simple(g: &Graph) {
    let mut sum = 0;
    for i in 0..g.node_count() {
        let nb = g.neighbors(i);
        assert!(nb.windows(2).all(|w| w[0] < w[1]));
        assert!(!nb.contains(&i));
        assert!(nb.iter().all(|&j| g.has_edge(j, i)));
        sum += nb.len();
    }
    assert_eq!(sum, 2 * g.edge_count());
}

fn all_families() -> Vec<Family> {
    vec![
        Family::ErdosRenyi { n: 120, p: 0.1 },
        Family::RingLattice { n: 30, k: 4 },
        Family::WattsStrogatz {
            n: 200,
            k: 5,
            p: 0.3,
        },
        Family::BarabasiAlbert {
            n: 300,
            m: 4,
            seed_clique: None,
        },
        Family::BarabasiAlbert {
            n: 300,
            m: 4,
            seed_clique: Some(9),
        },
        Family::HavelHakimi {
            degrees: vec![3, 3, 2, 2, 2, 1, 1],
        },
        Family::Bhl {
            n: 400,
            n0: 60,
            m: 5,
            triad_probability: 0.9,
        },
    ]
}

#[test]
fn same_seed_same_bytes() {
    for f in all_families() {
        let a = GenSpec::new(f.clone(), 77).generate().unwrap();
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let b = pool.install(|| GenSpec::new(f.clone(), 77).generate().unwrap());
        assert_eq!(write_edge_list(&a), write_edge_list(&b), "{f:?}");
        check_simple(&a);
    }
}

#[test]
fn different_streams_differ() {
    let spec = GenSpec::new(Family::ErdosRenyi { n: 60, p: 0.2 }, 3);
    assert_ne!(
        spec.generate_on_stream(0).unwrap(),
        spec.generate_on_stream(1).unwrap()
    );
}

#[test]
fn er_edge_count_is_concentrated() {
    let n = 2000usize;
    let pairs = (n * (n - 1) / 2) as f64;
    let sigma = (pairs * 0.2 * 0.8).sqrt();
    for seed in 0..3 {
        let g = GenSpec::new(Family::ErdosRenyi { n, p: 0.2 }, seed)
            .generate()
            .unwrap();
        assert!((g.edge_count() as f64 - 0.2 * pairs).abs() < 4.0 * sigma);
    }
}

#[test]
fn ring_lattice_cases() {
    let c6 = ring_lattice(6, 1).unwrap();
    assert_eq!(c6.edge_count(), 6);
    assert!(c6.degrees().iter().all(|&d| d == 2));
    assert!(ring_lattice(5, 2).is_ok());
    assert!(matches!(ring_lattice(4, 2), Err(Error::Parameter(_))));
    let g = ring_lattice(20, 2).unwrap();
    let counts = ksi_core::centrality::all_node_counts(&g);
    assert!(counts.iter().all(|c| c.boundary == 10));
}

#[test]
fn watts_strogatz_without_rewiring_is_the_lattice() {
    let a = GenSpec::new(
        Family::WattsStrogatz {
            n: 50,
            k: 3,
            p: 0.0,
        },
        1,
    )
    .generate()
    .unwrap();
    assert_eq!(a, ring_lattice(50, 3).unwrap());
}

#[test]
fn full_rewiring_keeps_edge_count() {
    let g = GenSpec::new(
        Family::WattsStrogatz {
            n: 500,
            k: 50,
            p: 1.0,
        },
        2,
    )
    .generate()
    .unwrap();
    assert_eq!(g.edge_count(), 500 * 50);
    let mean = g.degrees().iter().sum::<usize>() as f64 / 500.0;
    assert_eq!(mean, 100.0);
}

#[test]
fn barabasi_albert_small_cases() {
    let g = GenSpec::new(
        Family::BarabasiAlbert {
            n: 6,
            m: 5,
            seed_clique: None,
        },
        0,
    )
    .generate()
    .unwrap();
    assert_eq!(g.edge_count(), 15);
    assert!(GenSpec::new(
        Family::BarabasiAlbert {
            n: 5,
            m: 5,
            seed_clique: None
        },
        0
    )
    .generate()
    .is_err());
    assert!(GenSpec::new(
        Family::BarabasiAlbert {
            n: 5,
            m: 0,
            seed_clique: None
        },
        0
    )
    .generate()
    .is_err());
}

#[test]
fn havel_hakimi_cases() {
    let k4 = havel_hakimi(&[3, 3, 3, 3]).unwrap();
    assert_eq!(k4.edge_count(), 6);
    assert_eq!(havel_hakimi(&[2, 2, 2]).unwrap().edge_count(), 3);
    let err = havel_hakimi(&[3, 1]).unwrap_err();
    assert!(
        matches!(&err, Error::NotGraphical(m) if m.starts_with("step 1:")),
        "{err}"
    );
    assert!(havel_hakimi(&[1]).is_err());
    assert_eq!(havel_hakimi(&[]).unwrap().node_count(), 0);
}

#[test]
fn bhl_without_growth_is_the_core() {
    let g = GenSpec::new(
        Family::Bhl {
            n: 40,
            n0: 40,
            m: 5,
            triad_probability: 0.9,
        },
        8,
    )
    .generate()
    .unwrap();
    assert!(g.degrees().iter().all(|&d| (5..=36).contains(&d)));
}

#[test]
fn bhl_growth_adds_m_edges_per_node() {
    for seed in 0..4 {
        let base = GenSpec::new(
            Family::Bhl {
                n: 80,
                n0: 80,
                m: 6,
                triad_probability: 0.9,
            },
            seed,
        )
        .generate()
        .unwrap();
        let grown = GenSpec::new(
            Family::Bhl {
                n: 500,
                n0: 80,
                m: 6,
                triad_probability: 0.9,
            },
            seed,
        )
        .generate()
        .unwrap();
        assert_eq!(grown.edge_count(), base.edge_count() + (500 - 80) * 6);
    }
}

/// Erdős–Gallai test, used as an independent graphicality oracle.
fn graphical(seq: &[usize]) -> bool {
    let mut d = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let n = d.len();
    (1..=n).all(|k| {
        let lhs: usize = d[..k].iter().sum();
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        lhs <= rhs
    })
}

proptest! {
    #[test]
    fn havel_hakimi_realizes_exactly_the_graphical_sequences(seq in prop::collection::vec(0..9usize, 0..10)) {
        match havel_hakimi(&seq) {
            Ok(g) => {
                prop_assert!(graphical(&seq));
                prop_assert_eq!(g.degrees(), seq);
            }
            Err(_) => prop_assert!(!graphical(&seq)),
        }
    }

    #[test]
    fn barabasi_albert_edge_count(n in 2..120usize, m_raw in 1..20usize, seed in any::<u64>()) {
        let m = 1 + m_raw % (n - 1);
        let g = GenSpec::new(Family::BarabasiAlbert { n, m, seed_clique: None }, seed).generate().unwrap();
        prop_assert_eq!(g.edge_count(), m * (n - m) + m * (m - 1) / 2);
        check_simple(&g);
    }

    #[test]
    fn watts_strogatz_edge_count(n in 3..150usize, k_raw in 1..40usize, p in 0.0..=1.0f64, seed in any::<u64>()) {
        let k = 1 + k_raw % ((n - 1) / 2);
        let g = GenSpec::new(Family::WattsStrogatz { n, k, p }, seed).generate().unwrap();
        prop_assert_eq!(g.edge_count(), n * k);
        check_simple(&g);
    }
}

#[test]
fn spec_json_round_trip() {
    let spec = GenSpec::new(
        Family::Bhl {
            n: 10,
            n0: 6,
            m: 2,
            triad_probability: 0.9,
        },
        5,
    );
    let text = serde_json::to_string(&spec).unwrap();
    let back: GenSpec = serde_json::from_str(&text).unwrap();
    assert_eq!(back, spec);
    let short: GenSpec =
        serde_json::from_str(r#"{"family":"bhl","params":{"n":10,"n0":6,"m":2}}"#).unwrap();
    assert_eq!(
        short,
        GenSpec::new(
            Family::Bhl {
                n: 10,
                n0: 6,
                m: 2,
                triad_probability: 0.9
            },
            0
        )
    );
}
