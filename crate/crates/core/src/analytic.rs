//! Closed-form values for special graph families and for G(n, p).
//!
//! Family values are derived from exact per-class boundary counts in
//! `Ratio<i128>` and converted to the requested scalar only at the end.
//! [`printed`] keeps the commonly quoted closed-form expressions verbatim;
//! a few of them only hold on part of the parameter range (see the notes
//! there), which is why the two are kept apart.

use num_rational::Ratio;
use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::ring_lattice;
use crate::graph::Graph;
use crate::scalar::{convert, Scalar};

type Q = Ratio<i128>;

fn q(num: i128, den: i128) -> Q {
    Q::new(num, den)
}

/// One of the families with known per-node values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    /// Center plus `n` leaves.
    Star { n: usize },
    /// `n` copies of `K_k`, every vertex joined to one extra center.
    Windmill { n: usize, k: usize },
    /// Hub joined to every vertex of an `n`-cycle.
    Wheel { n: usize },
    /// `n` triangles; vertex `a` of triangle `t` is joined to vertex `a` of
    /// triangle `t + 1`.
    NestedTriangles { n: usize },
    /// Circulant graph of degree `2k`.
    RingLattice { n: usize, k: usize },
}

impl FamilyParams {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilyParams::Star { n } => n >= 1,
            FamilyParams::Windmill { n, k } => n >= 1 && k >= 2,
            FamilyParams::Wheel { n } => n >= 3,
            FamilyParams::NestedTriangles { n } => n >= 3,
            FamilyParams::RingLattice { n, k } => k >= 1 && 2 * k < n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::param(format!("invalid family parameters {self:?}")))
        }
    }

    pub fn node_count(&self) -> usize {
        match *self {
            FamilyParams::Star { n } => n + 1,
            FamilyParams::Windmill { n, k } => n * k + 1,
            FamilyParams::Wheel { n } => n + 1,
            FamilyParams::NestedTriangles { n } => 3 * n,
            FamilyParams::RingLattice { n, .. } => n,
        }
    }

    /// Builds the graph with the node numbering used by [`Self::class_of`].
    ///
    /// Star and windmill: center 0. Windmill blade `b` holds nodes
    /// `1 + b k ..= (b + 1) k`. Wheel: hub 0, rim `1..=n` in cycle order.
    /// Nested triangles: triangle `t` holds `3t, 3t + 1, 3t + 2`.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let nodes = self.node_count();
        match *self {
            FamilyParams::Star { n } => Graph::from_edges(nodes, (1..=n).map(|l| (0, l))),
            FamilyParams::Windmill { n, k } => {
                let mut edges = Vec::new();
                for b in 0..n {
                    let base = 1 + b * k;
                    for x in 0..k {
                        edges.push((0, base + x));
                        for y in x + 1..k {
                            edges.push((base + x, base + y));
                        }
                    }
                }
                Graph::from_edges(nodes, edges)
            }
            FamilyParams::Wheel { n } => {
                let spokes = (1..=n).map(|r| (0, r));
                let rim = (0..n).map(|r| (1 + r, 1 + (r + 1) % n));
                Graph::from_edges(nodes, spokes.chain(rim))
            }
            FamilyParams::NestedTriangles { n } => {
                let mut edges = Vec::new();
                for t in 0..n {
                    let b = 3 * t;
                    edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
                    if t + 1 < n {
                        edges.extend((0..3).map(|a| (b + a, b + 3 + a)));
                    }
                }
                Graph::from_edges(nodes, edges)
            }
            FamilyParams::RingLattice { n, k } => ring_lattice(n, k),
        }
    }

    /// Index into [`FamilyForms::classes`] for a node of [`Self::build`].
    pub fn class_of(&self, node: usize) -> usize {
        match *self {
            FamilyParams::Star { .. }
            | FamilyParams::Windmill { .. }
            | FamilyParams::Wheel { .. } => usize::from(node != 0),
            FamilyParams::NestedTriangles { n } => {
                let t = node / 3;
                if t == 0 || t == n - 1 {
                    0
                } else if t == 1 || t == n - 2 {
                    1
                } else {
                    2
                }
            }
            FamilyParams::RingLattice { .. } => 0,
        }
    }
}

/// Nodes of one structural class and their shared values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexClass<T> {
    pub label: &'static str,
    pub count: usize,
    pub degree: u64,
    pub boundary: u64,
    pub xi: T,
    pub xi_hat: T,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyForms<T> {
    pub params: FamilyParams,
    pub nodes: usize,
    pub classes: Vec<VertexClass<T>>,
    pub xi_avg: T,
    pub xi_hat_avg: T,
}

struct RawClass {
    label: &'static str,
    count: usize,
    degree: u64,
    boundary: u64,
}

fn raw_classes(params: &FamilyParams) -> Vec<RawClass> {
    let c = |label, count, degree, boundary| RawClass {
        label,
        count,
        degree,
        boundary,
    };
    match *params {
        FamilyParams::Star { n } => {
            let n64 = n as u64;
            vec![c("center", 1, n64, n64), c("leaf", n, 1, n64)]
        }
        FamilyParams::Windmill { n, k } => {
            let nk = (n * k) as u64;
            vec![c("center", 1, nk, nk), c("blade", n * k, k as u64, nk)]
        }
        FamilyParams::Wheel { n } => {
            let n64 = n as u64;
            // W(3) is K4: the two rim neighbors are adjacent
            let rim = if n == 3 { 3 } else { n64 + 2 };
            vec![c("hub", 1, n64, n64), c("rim", n, 3, rim)]
        }
        FamilyParams::NestedTriangles { n } => {
            // with three triangles the middle one touches two outer ones
            let second = if n == 3 { 12 } else { 13 };
            let second_count = if n == 3 { 3 } else { 6 };
            vec![
                c("outer", 6, 3, 8),
                c("second", second_count, 4, second),
                c("interior", 3 * n.saturating_sub(4), 4, 14),
            ]
        }
        FamilyParams::RingLattice { n, k } => {
            // neighbor at offset t reaches min(t, n - 2k - 1) nodes beyond the arc
            let spare = n - 2 * k - 1;
            let beyond: usize = (1..=k).map(|t| t.min(spare)).sum();
            vec![c("all", n, 2 * k as u64, (2 * k + 2 * beyond) as u64)]
        }
    }
}

/// Exact per-class and average values of `xi` and `xi_hat`.
pub fn analytic_centrality<T: Scalar>(params: FamilyParams) -> Result<FamilyForms<T>> {
    params.validate()?;
    let nodes = params.node_count() as i128;
    let raw = raw_classes(&params);
    let mut xi_sum = Q::from_integer(0);
    let mut xi_hat_sum = Q::from_integer(0);
    let mut classes = Vec::with_capacity(raw.len());
    for r in raw {
        let d = r.degree as i128;
        let b = r.boundary as i128;
        let xi = q(b, d);
        let xi_hat = q(b, d * (nodes - d));
        xi_sum += xi * r.count as i128;
        xi_hat_sum += xi_hat * r.count as i128;
        classes.push(VertexClass {
            label: r.label,
            count: r.count,
            degree: r.degree,
            boundary: r.boundary,
            xi: convert(&xi),
            xi_hat: convert(&xi_hat),
        });
    }
    Ok(FamilyForms {
        params,
        nodes: nodes as usize,
        classes,
        xi_avg: convert(&(xi_sum / nodes)),
        xi_hat_avg: convert(&(xi_hat_sum / nodes)),
    })
}

pub mod printed {
    //! The closed forms as usually quoted for these families.
    //!
    //! Known gaps against the exact values of [`super::analytic_centrality`]:
    //! * windmill average `xi_hat`: the quoted expression drops a factor `k`
    //!   from the blade term (it tends to `1/k^2`; the exact average tends to
    //!   `1/k`);
    //! * nested triangles average `xi`: the quoted `(63n - 103)/(18n)` uses
    //!   `16/9` where the outer-class sum is `16/3`; exact is `(21n - 13)/(6n)`;
    //! * wheel with `n = 3` and nested triangles with `n = 3`: the per-class
    //!   forms assume the rim (resp. the middle triangle) has room;
    //! * ring lattice: `k(k + 3)` assumes `n > 3k`.

    use super::*;

    #[derive(Debug, Clone, PartialEq)]
    pub struct PrintedForms {
        /// `(xi, xi_hat)` per class, aligned with `FamilyForms::classes`.
        pub classes: Vec<(Ratio<i128>, Ratio<i128>)>,
        pub xi_avg: Ratio<i128>,
        pub xi_hat_avg: Ratio<i128>,
    }

    pub fn forms(params: FamilyParams) -> Result<PrintedForms> {
        params.validate()?;
        let one = Q::from_integer(1);
        let forms = match params {
            FamilyParams::Star { n } => {
                let n = n as i128;
                PrintedForms {
                    classes: vec![(one, one), (Q::from_integer(n), one)],
                    xi_avg: q(n * n + 1, n + 1),
                    xi_hat_avg: one,
                }
            }
            FamilyParams::Windmill { n, k } => {
                let (n, k) = (n as i128, k as i128);
                PrintedForms {
                    classes: vec![(one, one), (Q::from_integer(n), q(n, n * k + 1 - k))],
                    xi_avg: q(1 + n * n * k, n * k + 1),
                    xi_hat_avg: q(n * n + n * k + 1 - k, (n * k + 1) * (n * k + 1 - k)),
                }
            }
            FamilyParams::Wheel { n } => {
                let n = n as i128;
                PrintedForms {
                    classes: vec![(one, one), (q(n + 2, 3), q(n + 2, 3 * (n - 2)))],
                    xi_avg: q(n * n + 2 * n + 3, 3 * (n + 1)),
                    xi_hat_avg: q((n + 6) * (n - 1), 3 * (n + 1) * (n - 2)),
                }
            }
            FamilyParams::NestedTriangles { n } => {
                let n = n as i128;
                PrintedForms {
                    classes: vec![
                        (q(8, 3), q(8, 9 * (n - 1))),
                        (q(13, 4), q(13, 4 * (3 * n - 4))),
                        (q(7, 2), q(7, 2 * (3 * n - 4))),
                    ],
                    xi_avg: q(63 * n - 103, 18 * n),
                    xi_hat_avg: q(63 * n * n - 102 * n + 7, 18 * n * (n - 1) * (3 * n - 4)),
                }
            }
            FamilyParams::RingLattice { n, k } => {
                let (n, k) = (n as i128, k as i128);
                let xi = q(k + 3, 2);
                let xi_hat = q(k + 3, 2 * (n - 2 * k));
                PrintedForms {
                    classes: vec![(xi, xi_hat)],
                    xi_avg: xi,
                    xi_hat_avg: xi_hat,
                }
            }
        };
        Ok(forms)
    }

    /// Boundary count `k(k + 3)` of every ring-lattice node.
    pub fn ring_lattice_boundary(k: usize) -> usize {
        k * (k + 3)
    }
}

/// Expected values over G(n, p), for any node and for the graph averages.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErExpectation<F> {
    pub n: usize,
    pub p: F,
    /// `E|E(N(i), V \ N(i))| = p(n-1)(1 + p(1-p)(n-2))`.
    pub e_boundary: F,
    /// `p(1 - (1-p)^(n-1)) + (1 - p^n)/n`, as commonly quoted.
    pub xi_hat: F,
    /// `xi_hat + p(1-p)^(n-1)/n`: the quoted form replaces the isolated-node
    /// term `(1-p)^(n-1)/n` by `(1-p)^n/n`; this is the exact expectation.
    pub xi_hat_exact: F,
    /// `1 + p(n-1)(1-p)(1 - (1-p)^(n-2))`.
    pub xi: F,
    pub xi_hat_avg: F,
    pub xi_hat_avg_exact: F,
    pub xi_avg: F,
}

fn float<F: Float>(x: f64) -> F {
    F::from(x).expect("float conversion")
}

fn check_er<F: Float>(n: usize, p: F) -> Result<()> {
    if n == 0 {
        return Err(Error::param("G(n, p) needs n >= 1"));
    }
    if n > i32::MAX as usize {
        return Err(Error::param("n too large for closed-form evaluation"));
    }
    if !(p >= F::zero() && p <= F::one()) {
        return Err(Error::param("p must lie in [0, 1]"));
    }
    Ok(())
}

pub fn er_expected<F: Float>(n: usize, p: F) -> Result<ErExpectation<F>> {
    check_er(n, p)?;
    let one = F::one();
    let nf: F = float(n as f64);
    let q1 = one - p;
    let ni = n as i32;
    let e_boundary = p * (nf - one) * (one + p * q1 * (nf - float(2.0)));
    let xi_hat = p * (one - q1.powi(ni - 1)) + (one - p.powi(ni)) / nf;
    let xi_hat_exact = xi_hat + p * q1.powi(ni - 1) / nf;
    let xi = if n >= 2 {
        one + p * (nf - one) * q1 * (one - q1.powi(ni - 2))
    } else {
        one
    };
    Ok(ErExpectation {
        n,
        p,
        e_boundary,
        xi_hat,
        xi_hat_exact,
        xi,
        xi_hat_avg: xi_hat,
        xi_hat_avg_exact: xi_hat_exact,
        xi_avg: xi,
    })
}

/// Leading terms for sparse G(n, lambda/n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SparseAsymptotics<F> {
    pub n: usize,
    pub lambda: F,
    /// `(1 + lambda(1 - e^-lambda)) / n`
    pub xi_hat_avg: F,
    /// `1 + lambda(1 - e^-lambda)`
    pub xi_avg: F,
}

pub fn er_sparse_asymptotics<F: Float>(n: usize, lambda: F) -> Result<SparseAsymptotics<F>> {
    let nf: F = float(n as f64);
    if n == 0 || !(lambda >= F::zero()) || lambda > nf {
        return Err(Error::param(
            "sparse asymptotics need n >= 1 and 0 <= lambda <= n",
        ));
    }
    let core = F::one() + lambda * (F::one() - (-lambda).exp());
    Ok(SparseAsymptotics {
        n,
        lambda,
        xi_hat_avg: core / nf,
        xi_avg: core,
    })
}

/// Exact-versus-leading-term comparison for sparse G(n, lambda/n).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SparseGap {
    pub n: usize,
    pub lambda: f64,
    pub xi_hat_avg_closed: f64,
    pub xi_hat_avg_leading: f64,
    pub abs_diff: f64,
    /// `abs_diff * n^2`, the constant in the `O(1/n^2)` remainder.
    pub constant: f64,
    pub xi_avg_closed: f64,
    pub xi_avg_leading: f64,
}

pub fn sparse_gap(n: usize, lambda: f64) -> Result<SparseGap> {
    let lead = er_sparse_asymptotics(n, lambda)?;
    let closed = er_expected(n, lambda / n as f64)?;
    let abs_diff = (closed.xi_hat_avg - lead.xi_hat_avg).abs();
    Ok(SparseGap {
        n,
        lambda,
        xi_hat_avg_closed: closed.xi_hat_avg,
        xi_hat_avg_leading: lead.xi_hat_avg,
        abs_diff,
        constant: abs_diff * (n as f64) * (n as f64),
        xi_avg_closed: closed.xi_avg,
        xi_avg_leading: lead.xi_avg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn big(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn star_five() {
        let f = analytic_centrality::<BigRational>(FamilyParams::Star { n: 5 }).unwrap();
        assert_eq!(f.xi_avg, big(26, 6));
        assert_eq!(f.xi_hat_avg, big(1, 1));
    }

    #[test]
    fn wheel_ten() {
        let f = analytic_centrality::<BigRational>(FamilyParams::Wheel { n: 10 }).unwrap();
        assert_eq!(f.classes[1].xi, big(4, 1));
        assert_eq!(f.xi_hat_avg, big(16 * 9, 3 * 11 * 8));
        assert_eq!(f.xi_hat_avg, big(6, 11));
    }

    #[test]
    fn nested_five_interior() {
        let f = analytic_centrality::<BigRational>(FamilyParams::NestedTriangles { n: 5 }).unwrap();
        assert_eq!(f.classes[2].xi, big(7, 2));
        assert_eq!(f.classes[2].count, 3);
    }

    #[test]
    fn windmill_classes_match_quoted_per_node_values() {
        for n in 1..6 {
            for k in 2..6 {
                let p = FamilyParams::Windmill { n, k };
                let f = analytic_centrality::<Q>(p).unwrap();
                let pr = printed::forms(p).unwrap();
                for (c, (xi, xi_hat)) in f.classes.iter().zip(&pr.classes) {
                    assert_eq!((&c.xi, &c.xi_hat), (xi, xi_hat));
                }
                assert_eq!(f.xi_avg, pr.xi_avg);
                let (ni, ki) = (n as i128, k as i128);
                let exact = q(n_sq_k_plus(ni, ki), (ni * ki + 1) * (ni * ki + 1 - ki));
                assert_eq!(f.xi_hat_avg, exact);
            }
        }
        fn n_sq_k_plus(n: i128, k: i128) -> i128 {
            n * n * k + n * k + 1 - k
        }
    }

    #[test]
    fn nested_average_xi_exact_form() {
        for n in 4..30 {
            let f = analytic_centrality::<Q>(FamilyParams::NestedTriangles { n }).unwrap();
            let ni = n as i128;
            assert_eq!(f.xi_avg, q(21 * ni - 13, 6 * ni));
            let pr = printed::forms(FamilyParams::NestedTriangles { n }).unwrap();
            assert_eq!(f.xi_hat_avg, pr.xi_hat_avg);
            assert_ne!(f.xi_avg, pr.xi_avg);
        }
    }

    #[test]
    fn ring_lattice_general_form() {
        // n > 3k recovers k(k + 3)
        let f = analytic_centrality::<Q>(FamilyParams::RingLattice { n: 20, k: 2 }).unwrap();
        assert_eq!(f.classes[0].boundary, 10);
        assert_eq!(f.xi_avg, q(5, 2));
        // n = 2k + 1 is complete
        let f = analytic_centrality::<Q>(FamilyParams::RingLattice { n: 7, k: 3 }).unwrap();
        assert_eq!(f.classes[0].boundary, 6);
        assert_eq!(f.xi_avg, q(1, 1));
    }

    #[test]
    fn invalid_params() {
        assert!(analytic_centrality::<f64>(FamilyParams::Wheel { n: 2 }).is_err());
        assert!(analytic_centrality::<f64>(FamilyParams::Windmill { n: 2, k: 1 }).is_err());
        assert!(analytic_centrality::<f64>(FamilyParams::RingLattice { n: 4, k: 2 }).is_err());
        assert!(analytic_centrality::<f64>(FamilyParams::Star { n: 0 }).is_err());
        assert!(printed::forms(FamilyParams::NestedTriangles { n: 2 }).is_err());
    }

    #[test]
    fn limits_at_large_n() {
        let n = 1_000_000;
        for k in 2..8 {
            let pr = printed::forms(FamilyParams::Windmill { n, k }).unwrap();
            let quoted = Scalar::to_f64(&pr.xi_hat_avg);
            let target = 1.0 / (k * k) as f64;
            assert!((quoted - target).abs() / target < 0.01);

            let exact = analytic_centrality::<f64>(FamilyParams::Windmill { n, k }).unwrap();
            let target = 1.0 / k as f64;
            assert!((exact.xi_hat_avg - target).abs() / target < 0.01);
        }
        let w = analytic_centrality::<f64>(FamilyParams::Wheel { n }).unwrap();
        assert!((w.xi_hat_avg - 1.0 / 3.0).abs() / (1.0 / 3.0) < 0.01);
    }

    #[test]
    fn er_endpoints() {
        let e = er_expected(10, 0.0f64).unwrap();
        assert_eq!(e.e_boundary, 0.0);
        assert_eq!(e.xi, 1.0);
        assert_eq!(e.xi_hat, 0.1);
        assert_eq!(e.xi_hat_exact, 0.1);
        let e = er_expected(10, 1.0f64).unwrap();
        assert_eq!(e.e_boundary, 9.0);
        assert_eq!(e.xi, 1.0);
        assert_eq!(e.xi_hat, 1.0);
        assert!(er_expected(0, 0.5f64).is_err());
        assert!(er_expected(5, 1.5f64).is_err());
        assert!(er_expected(5, f64::NAN).is_err());
    }

    #[test]
    fn er_single_node() {
        let e = er_expected(1, 0.7f64).unwrap();
        assert_eq!(e.xi, 1.0);
        assert_eq!(e.e_boundary, 0.0);
        assert!((e.xi_hat_exact - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sparse_leading_terms() {
        let a = er_sparse_asymptotics(100, 0.0f64).unwrap();
        assert_eq!(a.xi_hat_avg, 0.01);
        assert_eq!(a.xi_avg, 1.0);
        let a = er_sparse_asymptotics(1000, 5.0f64).unwrap();
        assert!((a.xi_avg - 5.966_310_265).abs() < 1e-8);
        assert!(er_sparse_asymptotics(10, 11.0f64).is_err());
        let gap = sparse_gap(10_000, 2.0).unwrap();
        assert!(gap.abs_diff < 1e-6);
        let gap = sparse_gap(1000, 5.0).unwrap();
        assert!((gap.xi_avg_closed - a.xi_avg).abs() < 0.05);
    }
}
