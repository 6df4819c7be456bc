//! Metric battery for simple undirected graphs and paired comparisons.

mod assortativity;
mod clustering;
mod cores;
mod degree;
mod eigen;
mod jacobi;
mod report;

pub use assortativity::assortativity_profile;
pub use clustering::{
    clustering_by_degree, local_triangles, local_triangles_with, ClusteringClass,
};
pub use cores::{core_decomposition, CoreDecomposition};
pub use degree::degree_distribution;
pub use eigen::{top_eigenvalues, top_eigenvalues_with, EigenOptions, DEFAULT_EIGENVALUES};
pub use report::{compare_reports, CompareOptions, Comparison, Metric, MetricReport};
