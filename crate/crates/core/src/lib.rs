//! Ksi-centrality and normalized ksi-centrality for undirected simple graphs.
//!
//! For a node `i` with neighborhood `N(i)` and degree `d`, the boundary count
//! `b = |E(N(i), V \ N(i))|` gives
//!
//! * `xi = b / d` (1 for isolated nodes),
//! * `xi_hat = b / (d (n - d))` (`1/n` for isolated nodes).
//!
//! The crate computes both by a neighborhood scan and, for verification, by
//! dense adjacency and Laplacian matrix identities. Around that sit seeded
//! generators, closed forms for several graph families and for G(n, p),
//! spectral and Cheeger bound checks, and distribution summaries.
//!
//! Values are generic over [`Scalar`]; the aliases below fix the common
//! choices.
//!
//! ```
//! use ksi_core::{Graph, NodeId, ksi};
//!
//! let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
//! let x: f64 = ksi(&path, NodeId(0)).unwrap();
//! assert_eq!(x, 2.0);
//! ```

pub mod analytic;
pub mod centrality;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod montecarlo;
pub mod rng;
pub mod scalar;
pub mod spectral;
pub mod stats;

pub use analytic::{
    analytic_centrality, er_expected, er_sparse_asymptotics, ErExpectation, FamilyForms,
    FamilyParams,
};
pub use centrality::{
    average_clustering, average_ksi, average_ksi_normalized, boundary_edge_count, ksi,
    ksi_normalized, ksi_normalized_via_laplacian, ksi_via_adjacency_matrix, local_clustering,
    CentralitySet, CentralityVector, DenseLimit, Measure,
};
pub use error::{Error, Result};
pub use generators::{Family, GenSpec};
pub use graph::{Graph, NodeId};
pub use io::{parse_edge_list, write_edge_list, LabeledGraph};
pub use rng::GraphRng;
pub use scalar::{Rational, Scalar};
pub use spectral::{
    algebraic_connectivity, cheeger_exact, verify_cheeger_bounds, verify_lambda2_bound,
};
pub use stats::{
    network_report, shape_classify, summarize, DistributionSummary, Shape, ShapeThresholds,
};

/// Arbitrary-precision rational.
pub type Exact = num_rational::BigRational;

pub type CentralityVectorF64 = CentralityVector<f64>;
pub type CentralityVectorF32 = CentralityVector<f32>;
pub type CentralityVectorExact = CentralityVector<Exact>;
pub type FamilyFormsF64 = FamilyForms<f64>;
pub type FamilyFormsExact = FamilyForms<Exact>;
pub type ErExpectationF64 = ErExpectation<f64>;
pub type DistributionSummaryF64 = DistributionSummary<f64>;
