use ksi_core::stats::{ba_size_invariance, network_report, ratio_series_ws, DEFAULT_BINS};
use ksi_core::{shape_classify, summarize, FamilyParams, Shape, ShapeThresholds};
use proptest::prelude::*;

fn two_point_skewness(a: f64, ka: usize, b: f64, kb: usize) -> f64 {
    let n = (ka + kb) as f64;
    let p = ka as f64 / n;
    let q = 1.0 - p;
    let g1 = (a - b).signum() * (q - p) / (p * q).sqrt();
    g1 * (n * (n - 1.0)).sqrt() / (n - 2.0)
}

proptest! {
    #[test]
    fn two_point_closed_form(a in -50.0..50.0f64, gap in 0.5..40.0f64, ka in 1..40usize, kb in 1..40usize) {
        prop_assume!(ka + kb >= 3);
        let b = a + gap;
        let mut v = vec![a; ka];
        v.extend(std::iter::repeat_n(b, kb));
        let s = summarize(&v, 10).unwrap();
        prop_assert!((s.skewness - two_point_skewness(a, ka, b, kb)).abs() <= 1e-9 * (1.0 + s.skewness.abs()));
    }

    #[test]
    fn permutation_invariant(mut v in prop::collection::vec(-1e3..1e3f64, 1..60), bins in 1..30usize) {
        let a = summarize(&v, bins).unwrap();
        v.reverse();
        let third = v.len() / 3;
        v.rotate_left(third);
        let b = summarize(&v, bins).unwrap();
        prop_assert!((a.mean - b.mean).abs() <= 1e-9);
        prop_assert!((a.variance - b.variance).abs() <= 1e-9 * a.variance.max(1.0));
        prop_assert!((a.skewness - b.skewness).abs() <= 1e-9);
        prop_assert_eq!(&a.histogram.counts, &b.histogram.counts);
        prop_assert_eq!(a.histogram.counts.iter().sum::<usize>(), v.len());
        prop_assert!(a.variance >= 0.0);
        prop_assert_eq!(a.histogram.edges[0], a.min);
        prop_assert_eq!(*a.histogram.edges.last().unwrap(), a.max);
    }
}

#[test]
fn star_xi_is_left_skewed() {
    for n in 3..40 {
        let g = FamilyParams::Star { n }.build().unwrap();
        let r = network_report("star", &g, DEFAULT_BINS, ShapeThresholds::default()).unwrap();
        assert!(r.xi.skewness < 0.0, "n={n}");
        assert_eq!(r.xi_hat_avg, 1.0);
    }
    let g = FamilyParams::Star { n: 99 }.build().unwrap();
    let r = network_report("star", &g, DEFAULT_BINS, ShapeThresholds::default()).unwrap();
    assert_eq!(r.shape, Some(Shape::LeftSkewed));
    assert_eq!(r.table_row(), ("star".to_string(), 1.0, r.xi_avg, 100));
}

#[test]
fn report_is_consistent() {
    let g = ksi_core::GenSpec::new(
        ksi_core::Family::BarabasiAlbert {
            n: 500,
            m: 5,
            seed_clique: None,
        },
        1,
    )
    .generate()
    .unwrap();
    let r = network_report("ba", &g, 20, ShapeThresholds::default()).unwrap();
    assert!((r.xi.mean - r.xi_avg).abs() <= 1e-12 * r.xi_avg);
    assert_eq!(r.xi.count, 500);
    assert_eq!(r.m, g.edge_count());
}

#[test]
fn thresholds_are_configurable() {
    let s = summarize(&[1.0, 1.0, 1.0, 10.0], 3).unwrap();
    assert_eq!(
        shape_classify(&s, ShapeThresholds::default()).unwrap(),
        Shape::RightSkewed
    );
    let wide = ShapeThresholds {
        right: 5.0,
        left: -5.0,
    };
    assert_eq!(shape_classify(&s, wide).unwrap(), Shape::Centered);
}

#[test]
fn experiment_grids() {
    let pts = ratio_series_ws(100, 5, &[0.0, 0.5, 1.0], &[1, 2]).unwrap();
    assert_eq!(pts.len(), 3);
    assert!(pts[2].xi_ratio < 1.0);
    let cells = ba_size_invariance(&[100, 200], &[0.05, 0.1], &[1]).unwrap();
    assert_eq!(cells.len(), 4);
    assert_eq!((cells[0].n, cells[0].m), (100, 5));
    assert!(ba_size_invariance(&[100], &[1.5], &[1]).is_err());
    assert!(ba_size_invariance(&[100], &[0.1], &[]).is_err());
}
