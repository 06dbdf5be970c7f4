mod common;

use common::{from_bits, from_mask};
use ksi_core::spectral::{cut_size, EigenMethod, SpectralOptions};
use ksi_core::{
    algebraic_connectivity, cheeger_exact, verify_cheeger_bounds, verify_lambda2_bound, Family,
    FamilyParams, GenSpec, Graph,
};
use proptest::prelude::*;

fn complete(n: usize) -> Graph {
    Graph::from_edges(n, common::pairs(n)).unwrap()
}

#[test]
fn complete_graphs_are_tight() {
    for n in 3..=20 {
        let r = verify_lambda2_bound(&complete(n), &SpectralOptions::default()).unwrap();
        assert!((r.spectral.lambda2 - n as f64).abs() < 1e-9);
        assert!(r.slack.iter().all(|s| s.abs() < 1e-9));
        assert!(r.holds);
    }
}

#[test]
fn lambda2_bound_on_random_graphs() {
    let opts = SpectralOptions::default();
    for s in 0..60u64 {
        let n = 5 + (s as usize * 7) % 60;
        let p = 0.05 + 0.9 * (s % 10) as f64 / 9.0;
        let g = GenSpec::new(Family::ErdosRenyi { n, p }, s)
            .generate()
            .unwrap();
        let r = verify_lambda2_bound(&g, &opts).unwrap();
        assert!(r.holds, "seed {s}: {:?}", r.violations);
        assert!(r.spectral.residual < 1e-8);
    }
}

#[test]
fn dense_and_iterative_agree() {
    for s in 0..6u64 {
        let g = GenSpec::new(
            Family::WattsStrogatz {
                n: 150,
                k: 3,
                p: 0.2,
            },
            s,
        )
        .generate()
        .unwrap();
        let dense = algebraic_connectivity(
            &g,
            &SpectralOptions {
                force: Some(EigenMethod::DenseEigh),
                ..Default::default()
            },
        )
        .unwrap();
        let iter = algebraic_connectivity(
            &g,
            &SpectralOptions {
                force: Some(EigenMethod::Iterative),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(
            (dense.lambda2 - iter.lambda2).abs() < 1e-6,
            "{dense:?} {iter:?}"
        );
        assert!(iter.residual < 1e-8);
    }
}

#[test]
fn disconnected_has_zero_lambda2() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    assert!(
        algebraic_connectivity(&g, &SpectralOptions::default())
            .unwrap()
            .lambda2
            .abs()
            < 1e-8
    );
    let g = Graph::from_edges(300, [(0, 1), (2, 3)]).unwrap();
    let it = SpectralOptions {
        force: Some(EigenMethod::Iterative),
        ..Default::default()
    };
    assert!(algebraic_connectivity(&g, &it).unwrap().lambda2.abs() < 1e-8);
}

/// Every subset of size at most n/2, checked directly.
fn brute_cheeger(g: &Graph) -> (u64, u64) {
    let n = g.node_count();
    let mut best = (u64::MAX, 1u64);
    for mask in 1u64..1 << n {
        let size = mask.count_ones() as u64;
        if 2 * size > n as u64 {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let cut = cut_size(g, &set);
        if (cut as u128) * (best.1 as u128) < (best.0 as u128) * (size as u128) {
            best = (cut, size);
        }
    }
    best
}

#[test]
fn exhaustive_small_graphs() {
    for n in 2..=6usize {
        for mask in 0..1u64 << (n * (n - 1) / 2) {
            let g = from_mask(n, mask);
            let r = verify_cheeger_bounds(&g).unwrap();
            assert!(r.degree_bound_holds, "n={n} mask={mask:#x}");
            assert!(r.normalized_bound_holds, "n={n} mask={mask:#x}");
            let (cut, size) = brute_cheeger(&g);
            assert_eq!(
                r.cheeger.cut as u128 * size as u128,
                cut as u128 * r.cheeger.size as u128,
                "n={n} mask={mask:#x}"
            );
        }
    }
}

fn connected_strategy() -> impl Strategy<Value = Graph> {
    (2..=12usize)
        .prop_flat_map(|n| {
            prop::collection::vec(prop::bool::weighted(0.4), n * (n - 1) / 2)
                .prop_map(move |b| from_bits(n, &b))
        })
        .prop_filter("connected", |g| g.is_connected())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn cheeger_inequality_cross_check(g in connected_strategy()) {
        let c = cheeger_exact(&g).unwrap();
        let l2 = algebraic_connectivity(&g, &SpectralOptions::default()).unwrap().lambda2;
        prop_assert!(l2 / 2.0 <= c.h_f64() + 1e-9);
        prop_assert_eq!(cut_size(&g, &c.witness), c.cut);
        prop_assert_eq!(c.witness.len() as u64, c.size);
        prop_assert!(c.witness.len() * 2 <= g.node_count());
    }
}

#[test]
fn families_satisfy_lambda2_bound() {
    let opts = SpectralOptions::default();
    let mut params = vec![];
    for n in 1..=20 {
        params.push(FamilyParams::Star { n });
        params.push(FamilyParams::Windmill {
            n: n.min(6),
            k: 2 + n % 5,
        });
    }
    for n in 3..=20 {
        params.push(FamilyParams::Wheel { n });
        params.push(FamilyParams::NestedTriangles { n });
        params.push(FamilyParams::RingLattice {
            n,
            k: 1 + n % ((n - 1) / 2),
        });
    }
    for p in params {
        let g = p.build().unwrap();
        assert!(verify_lambda2_bound(&g, &opts).unwrap().holds, "{p:?}");
    }
}

#[test]
fn capacity_limits() {
    assert!(cheeger_exact(&Graph::empty(23)).is_err());
    assert!(algebraic_connectivity(&Graph::empty(1), &SpectralOptions::default()).is_err());
}
