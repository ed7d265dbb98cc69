//! Finite-`N` side of the picture: sample `A^(N,p)`, diagonalise it (or the
//! Laplacian `V − A`), and compare trace moments with the limits from
//! [`crate::moments`].

mod ecdf;
mod eigen;
mod estimate;
mod exact;
mod graph;
mod rng;
mod spectrum;

pub use ecdf::{ecdf_and_histogram, EcdfPoint, HistogramBin, SpectralDistribution};
pub use eigen::{symmetric_eigenvalues, MAX_QL_ITERATIONS};
pub use estimate::{
    estimate_moments, within_limit_tolerance, MomentRecord, SpectralEstimate, FINITE_SIZE_ALLOWANCE,
};
pub use exact::{exact_finite_moment, expected_normalized_trace, MAX_EXACT_N, MAX_EXACT_POWER, MAX_SHAPE_POWER};
pub use graph::{
    component_count, degree_statistics, max_degree, poisson_tv_distance, sample_graph, GraphSample,
    UnionFind,
};
pub use rng::{pair_index, pair_uniform};
pub use spectrum::{spectrum, MatrixKind, SpectrumResult, MAX_DENSE_N, ZERO_EIGENVALUE_TOL};
