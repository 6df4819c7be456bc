//! Generative models: Stochastic Kronecker, noisy Kronecker and Chung-Lu.

mod alias;
mod chung_lu;
mod edges;
mod generator;
mod skg;

pub use alias::AliasTable;
pub use chung_lu::{
    associated_cl, cl_entry, expected_degrees, generate_cl, generate_cl_with, DegreeSequence,
};
pub use edges::{symmetrize, EdgeList, Symmetrized};
pub use generator::{
    check_ratio_condition, skg_entry, validate_generator, BitProfile, GeneratorMatrix,
};
pub use skg::{
    generate_nskg, generate_nskg_with, generate_skg, generate_skg_with, noise_schedule,
    skg_sample_edge, GenerationOptions, NoiseSchedule, SkgParams, DEFAULT_CHUNK_SIZE,
};
