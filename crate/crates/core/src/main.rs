use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use krongraph::cli_io::{
    cmd_analyze, cmd_compare, cmd_fit_cl, cmd_generate, cmd_spectrum, find_preset, presets,
    AnalyzeOptions, ClSource, ExperimentConfig, FitClConfig, ModelChoice, Preset,
};
use krongraph::metrics::{CompareOptions, EigenOptions, Metric, DEFAULT_EIGENVALUES};
use krongraph::models::DEFAULT_CHUNK_SIZE;
use krongraph::{Error, GeneratorMatrix, Result};

#[derive(Parser)]
#[command(
    name = "krongraph",
    version,
    about = "Kronecker and Chung-Lu graph generation and analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Compute graph metrics of an edge list.
    Analyze(AnalyzeArgs),
    /// Analyze two edge lists and report the gaps between them.
    Compare(CompareArgs),
    /// Fit a Chung-Lu model to an edge list's degrees and sample it.
    FitCl(FitClArgs),
    /// Closed-form value spectra of the Kronecker and Chung-Lu matrices.
    Spectrum(SpectrumArgs),
    /// List the built-in parameter presets.
    Presets,
}

#[derive(Args)]
struct MatrixArgs {
    /// Named parameter set (see `presets`); explicit flags override it.
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    t1: Option<f64>,
    #[arg(long)]
    t2: Option<f64>,
    #[arg(long)]
    t3: Option<f64>,
    #[arg(long)]
    t4: Option<f64>,
    /// Number of Kronecker levels; the graph has 2^levels vertices.
    #[arg(long)]
    levels: Option<u32>,
}

impl MatrixArgs {
    /// Without a preset or matrix the Graph500 preset is used.
    fn resolve(&self) -> Result<(Option<Preset>, GeneratorMatrix, u32)> {
        let given = [self.t1, self.t2, self.t3, self.t4];
        let preset = match (&self.preset, given.iter().any(Option::is_some)) {
            (Some(name), _) => Some(find_preset(name)?),
            (None, false) => Some(find_preset("graph500")?),
            (None, true) => None,
        };
        let base = preset.as_ref().map(|p| p.generator.entries());
        let mut t = [0.0; 4];
        for (k, v) in given.iter().enumerate() {
            t[k] = match (v, base) {
                (Some(v), _) => *v,
                (None, Some(b)) => b[k],
                (None, None) => {
                    return Err(Error::InvalidArgument(format!(
                        "--t{} is required without a preset",
                        k + 1
                    )))
                }
            };
        }
        let levels = match (self.levels, &preset) {
            (Some(l), _) => l,
            (None, Some(p)) => p.levels,
            (None, None) => return Err(Error::InvalidArgument("--levels is required".into())),
        };
        Ok((
            preset,
            GeneratorMatrix::new(t[0], t[1], t[2], t[3])?,
            levels,
        ))
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value = "skg")]
    model: ModelChoice,
    #[command(flatten)]
    matrix: MatrixArgs,
    /// Edge insertions; defaults to the preset's rule.
    #[arg(long)]
    edges: Option<u64>,
    /// Noise level for the nskg model.
    #[arg(long)]
    noise: Option<f64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
    chunk_size: u64,
    /// Chung-Lu weights file (`vertex out in` lines) instead of the
    /// Kronecker expected degrees.
    #[arg(long)]
    degrees: Option<PathBuf>,
    /// Output file; defaults to `<out-dir>/<model>.tsv`.
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct MetricArgs {
    /// Comma-separated subset of degree,cc,eig,assort,core.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "degree,cc,eig,assort,core"
    )]
    metrics: Vec<Metric>,
    /// Number of top adjacency eigenvalues.
    #[arg(long, default_value_t = DEFAULT_EIGENVALUES)]
    eigs: usize,
    /// Also write a spy raster of this (power of two) resolution.
    #[arg(long)]
    spy: Option<usize>,
    /// Seed of the eigensolver start vectors.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

impl MetricArgs {
    fn options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            metrics: self.metrics.clone(),
            eigenvalues: self.eigs,
            spy_resolution: self.spy,
            eigen: EigenOptions {
                seed: self.seed,
                ..Default::default()
            },
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[command(flatten)]
    metrics: MetricArgs,
}

#[derive(Args)]
struct CompareArgs {
    first: PathBuf,
    second: PathBuf,
    #[command(flatten)]
    metrics: MetricArgs,
    /// Skip degree classes smaller than this in the clustering gap.
    #[arg(long, default_value_t = 1)]
    min_class: usize,
}

#[derive(Args)]
struct FitClArgs {
    input: PathBuf,
    /// Insertions; defaults to the input's undirected edge count.
    #[arg(long)]
    edges: Option<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_CHUNK_SIZE)]
    chunk_size: u64,
    #[arg(long, short)]
    out: Option<PathBuf>,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    matrix: MatrixArgs,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

fn output_path(out: &Option<PathBuf>, dir: &Path, name: &str) -> PathBuf {
    out.clone().unwrap_or_else(|| dir.join(name))
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("KRONGRAPH_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidArgument(format!("KRONGRAPH_THREADS={raw:?}")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    log::debug!("using {threads} worker threads");
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match cli.command {
        Command::Generate(a) => {
            let (preset, generator, levels) = a.matrix.resolve()?;
            let edges = match (a.edges, &preset) {
                (Some(m), _) => m,
                (None, Some(p)) => p.edges_for(levels),
                (None, None) => return Err(Error::InvalidArgument("--edges is required".into())),
            };
            let noise = match a.model {
                ModelChoice::Nskg => a.noise.or(preset.as_ref().and_then(|p| p.noise)),
                _ => None,
            };
            let config = ExperimentConfig {
                model: a.model,
                preset: preset.map(|p| p.name.to_string()),
                generator,
                levels,
                edges,
                noise,
                seed: a.seed,
                chunk_size: a.chunk_size,
                cl_source: a.degrees.map_or(ClSource::Associated, ClSource::DegreeFile),
            };
            let out = output_path(&a.out, &a.out_dir, &format!("{}.tsv", a.model.name()));
            let s = cmd_generate(&config, &out)?;
            println!(
                "wrote {} edges on {} vertices to {}",
                s.edges,
                s.vertices,
                s.path.display()
            );
        }
        Command::Analyze(a) => {
            let s = cmd_analyze(&a.input, &a.metrics.options(), &a.metrics.out_dir)?;
            println!(
                "{} vertices, {} edges ({} duplicate pairs, {} self-loops dropped); results in {}",
                s.vertices,
                s.edges,
                s.duplicates,
                s.self_loops,
                a.metrics.out_dir.display()
            );
        }
        Command::Compare(a) => {
            let compare = CompareOptions {
                min_class_vertices: a.min_class,
            };
            let s = cmd_compare(
                &a.first,
                &a.second,
                &a.metrics.options(),
                &compare,
                &a.metrics.out_dir,
            )?;
            let c = &s.comparison;
            if let Some((d, gap)) = c.clustering_max_gap {
                println!("clustering: max gap {gap:.6} at degree {d}");
            }
            if let Some(g) = c.eigenvalue_max_relative_gap() {
                println!("eigenvalues: max relative gap {g:.6}");
            }
            if let Some(g) = c.degree_tv_distance {
                println!("degree distribution: total variation {g:.6}");
            }
            if let Some(g) = c.core_size_max_relative_gap {
                println!("core sizes: max relative gap {g:.6}");
            }
            if let Some(g) = c.assortativity_max_relative_gap {
                println!("assortativity: max relative gap {g:.6}");
            }
        }
        Command::FitCl(a) => {
            let config = FitClConfig {
                input: a.input,
                edges: a.edges,
                seed: a.seed,
                chunk_size: a.chunk_size,
            };
            let out = output_path(&a.out, &a.out_dir, "cl-fit.tsv");
            let s = cmd_fit_cl(&config, &out)?;
            println!(
                "wrote {} edges on {} vertices to {}",
                s.edges,
                s.vertices,
                s.path.display()
            );
        }
        Command::Spectrum(a) => {
            let (_, t, levels) = a.matrix.resolve()?;
            let s = cmd_spectrum(&t, levels, &a.out_dir)?;
            println!(
                "distinct values: {} kronecker, {} chung-lu",
                s.skg_distinct, s.cl_distinct
            );
            println!("max |P_kron - P_cl|: {:e}", s.max_entry_gap);
            println!(
                "kronecker mass in bins below 1e-20: {:e}",
                s.binned_mass_below
            );
        }
        Command::Presets => {
            println!(
                "{:<14} {:>6} {:>10}  {:<32} description",
                "name", "levels", "edges", "t1 t2 t3 t4"
            );
            for p in presets() {
                let [t1, t2, t3, t4] = p.generator.entries();
                println!(
                    "{:<14} {:>6} {:>10}  {:<32} {}",
                    p.name,
                    p.levels,
                    p.edge_count(),
                    format!("{t1} {t2} {t3} {t4}"),
                    p.description
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
