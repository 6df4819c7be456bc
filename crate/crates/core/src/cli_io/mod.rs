//! Files, presets and the pipelines behind the command-line verbs.

mod commands;
mod edge_list;
mod presets;

pub use commands::{
    cmd_analyze, cmd_compare, cmd_fit_cl, cmd_generate, cmd_spectrum, AnalyzeOptions,
    AnalyzeSummary, ClSource, CompareSummary, ExperimentConfig, FitClConfig, GenerateSummary,
    ModelChoice, SpectrumSummary, LOW_MASS_THRESHOLD,
};
pub use edge_list::{parse_edge_list, read_edge_list_file, write_edge_list, Provenance};
pub use presets::{find_preset, presets, EdgeRule, Preset, GRAPH500_LEVELS};
