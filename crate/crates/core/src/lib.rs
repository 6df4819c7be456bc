//! Stochastic Kronecker (SKG), noisy Kronecker (NSKG) and Chung-Lu (CL) random
//! graph generators, closed-form analysis of their edge probability matrices,
//! and the metric battery used to compare graphs drawn from them.
//!
//! The crate is organised around four modules:
//!
//! * [`models`] builds generator matrices, samples edge lists and derives the
//!   expected degree sequence (the associated CL model) of a Kronecker model.
//! * [`matrix_analysis`] enumerates the distinct entries of both probability
//!   matrices with exact multiplicities, without ever forming an n x n array.
//! * [`metrics`] computes degree, clustering, eigenvalue, assortativity and
//!   k-core statistics of simple undirected graphs and compares two reports.
//! * [`cli_io`] holds edge-list parsing and writing, parameter presets and the
//!   pipelines behind the `krongraph` command-line tool.
//!
//! Edge generation and the per-vertex metric loops run on rayon when the
//! `parallel` feature is enabled (the default). Every generator is a pure
//! function of its inputs, the seed and the chunk size, so output does not
//! depend on the number of worker threads.

pub mod cli_io;
mod error;
pub mod graph;
pub mod matrix_analysis;
pub mod metrics;
pub mod models;
pub mod par;
pub(crate) mod rng;

pub use error::{Error, Result};
pub use graph::Graph;
pub use models::{DegreeSequence, EdgeList, GeneratorMatrix, SkgParams};
