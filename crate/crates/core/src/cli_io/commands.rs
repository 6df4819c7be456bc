use std::fmt::Display;
use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::edge_list::{read_edge_list_file, write_edge_list, Provenance};
use crate::error::{Error, Result};
use crate::matrix_analysis::{
    bin_skg_into_cl, cl_spectrum, mass_below, max_entry_gap, skg_spectrum, spy_raster, ClassLabel,
};
use crate::metrics::{
    compare_reports, CompareOptions, Comparison, EigenOptions, Metric, MetricReport,
};
use crate::models::{
    associated_cl, generate_cl_with, generate_nskg_with, generate_skg_with, symmetrize,
    DegreeSequence, EdgeList, GenerationOptions, GeneratorMatrix, SkgParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelChoice {
    Skg,
    Nskg,
    Cl,
}

impl ModelChoice {
    pub fn name(self) -> &'static str {
        match self {
            ModelChoice::Skg => "skg",
            ModelChoice::Nskg => "nskg",
            ModelChoice::Cl => "cl",
        }
    }
}

impl FromStr for ModelChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skg" => Ok(ModelChoice::Skg),
            "nskg" => Ok(ModelChoice::Nskg),
            "cl" => Ok(ModelChoice::Cl),
            _ => Err(Error::InvalidArgument(format!("unknown model {s:?}"))),
        }
    }
}

/// Where a CL model gets its weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClSource {
    /// Expected degrees of the Kronecker parameters in the config.
    Associated,
    /// `vertex out_weight in_weight` lines.
    DegreeFile(PathBuf),
}

/// Everything `generate` needs; also recoverable from a file's header.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub model: ModelChoice,
    pub preset: Option<String>,
    pub generator: GeneratorMatrix,
    pub levels: u32,
    pub edges: u64,
    pub noise: Option<f64>,
    pub seed: u64,
    pub chunk_size: u64,
    pub cl_source: ClSource,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenerateSummary {
    pub path: PathBuf,
    pub vertices: u64,
    pub edges: u64,
    pub header: Provenance,
}

fn field<T: FromStr>(p: &Provenance, key: &str) -> Result<T> {
    p.get(key)
        .ok_or_else(|| Error::InvalidArgument(format!("header lacks {key:?}")))?
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad header value for {key:?}")))
}

fn parse_generator(text: &str) -> Result<GeneratorMatrix> {
    let t: Vec<f64> = text
        .split_whitespace()
        .map(|x| x.parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::InvalidArgument(format!("bad generator {text:?}")))?;
    match t[..] {
        [a, b, c, d] => GeneratorMatrix::new(a, b, c, d),
        _ => Err(Error::InvalidArgument(format!("bad generator {text:?}"))),
    }
}

fn format_generator(t: &GeneratorMatrix) -> String {
    let [a, b, c, d] = t.entries();
    format!("{a} {b} {c} {d}")
}

/// Reads `vertex out in` lines; unlisted vertices get zero weight.
pub(crate) fn read_degree_file(path: &Path) -> Result<DegreeSequence> {
    let reader = BufReader::new(File::open(path)?);
    let mut rows: Vec<(usize, f64, f64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: idx + 1,
            content: line.clone(),
        };
        let f: Vec<&str> = trimmed.split_whitespace().collect();
        let [v, o, i] = f[..] else {
            return Err(malformed());
        };
        rows.push((
            v.parse().map_err(|_| malformed())?,
            o.parse().map_err(|_| malformed())?,
            i.parse().map_err(|_| malformed())?,
        ));
    }
    let n = rows
        .iter()
        .map(|r| r.0 + 1)
        .max()
        .ok_or(Error::EmptyInput)?;
    let mut out = vec![0.0; n];
    let mut inw = vec![0.0; n];
    for (v, o, i) in rows {
        out[v] += o;
        inw[v] += i;
    }
    DegreeSequence::new(out, inw)
}

impl ExperimentConfig {
    pub fn params(&self) -> Result<SkgParams> {
        SkgParams::new(self.generator, self.levels, self.edges)
    }

    fn options(&self) -> GenerationOptions {
        GenerationOptions {
            chunk_size: self.chunk_size,
            ..Default::default()
        }
    }

    fn base_header(&self) -> Provenance {
        let mut p = Provenance::new();
        p.push("model", self.model.name());
        if let Some(name) = &self.preset {
            p.push("preset", name);
        }
        p.push("generator", format_generator(&self.generator))
            .push("levels", self.levels)
            .push("edges", self.edges)
            .push("seed", self.seed)
            .push("chunk-size", self.chunk_size);
        p
    }

    /// Generates in memory and returns the edges with their header.
    pub fn generate(&self) -> Result<(EdgeList, Provenance)> {
        let params = self.params()?;
        let mut header = self.base_header();
        let edges = match self.model {
            ModelChoice::Skg => generate_skg_with(&params, self.seed, &self.options())?,
            ModelChoice::Nskg => {
                let noise = self.noise.ok_or_else(|| {
                    Error::InvalidArgument("the nskg model needs a noise level".into())
                })?;
                let (schedule, edges) =
                    generate_nskg_with(&params, noise, self.seed, &self.options())?;
                header.push("noise", noise);
                for (i, t) in schedule.levels.iter().enumerate() {
                    header.push(format!("level-{}", i + 1), format_generator(t));
                }
                edges
            }
            ModelChoice::Cl => {
                let degrees = match &self.cl_source {
                    ClSource::Associated => {
                        header.push("cl-weights", "associated");
                        associated_cl(&self.generator, self.levels, self.edges)?
                    }
                    ClSource::DegreeFile(path) => {
                        header.push("cl-weights", format!("file {}", path.display()));
                        read_degree_file(path)?
                    }
                };
                generate_cl_with(&degrees, self.edges, self.seed, &self.options())?
            }
        };
        header.push("vertices", edges.vertex_count());
        Ok((edges, header))
    }

    /// Rebuilds the config recorded in a `generate` header.
    pub fn from_provenance(p: &Provenance) -> Result<Self> {
        let model: ModelChoice = field(p, "model")?;
        let cl_source = match p.get("cl-weights") {
            None | Some("associated") => ClSource::Associated,
            Some(other) => match other.strip_prefix("file ") {
                Some(path) => ClSource::DegreeFile(PathBuf::from(path)),
                None => return Err(Error::InvalidArgument(format!("bad cl-weights {other:?}"))),
            },
        };
        Ok(ExperimentConfig {
            model,
            preset: p.get("preset").map(str::to_string),
            generator: parse_generator(p.get("generator").unwrap_or_default())?,
            levels: field(p, "levels")?,
            edges: field(p, "edges")?,
            noise: p.get("noise").map(|_| field(p, "noise")).transpose()?,
            seed: field(p, "seed")?,
            chunk_size: field(p, "chunk-size")?,
            cl_source,
        })
    }
}

fn create_parent(path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    Ok(())
}

fn write_edges_file(path: &Path, header: &Provenance, edges: &EdgeList) -> Result<()> {
    create_parent(path)?;
    let w = BufWriter::with_capacity(1 << 20, File::create(path)?);
    write_edge_list(w, header, edges)
}

/// Generates a graph and writes it as a tab-separated edge list with a
/// provenance header.
pub fn cmd_generate(config: &ExperimentConfig, out: &Path) -> Result<GenerateSummary> {
    let (edges, header) = config.generate()?;
    write_edges_file(out, &header, &edges)?;
    Ok(GenerateSummary {
        path: out.to_path_buf(),
        vertices: edges.vertex_count(),
        edges: edges.len() as u64,
        header,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct FitClConfig {
    pub input: PathBuf,
    /// Insertions to draw; defaults to the input's undirected edge count.
    pub edges: Option<u64>,
    pub seed: u64,
    pub chunk_size: u64,
}

/// Fits CL to a graph by using its (symmetrized) degrees as both weight
/// sequences, then samples and writes the fitted graph.
pub fn cmd_fit_cl(config: &FitClConfig, out: &Path) -> Result<GenerateSummary> {
    let raw = read_edge_list_file(&config.input)?;
    let sym = symmetrize(&raw);
    let degrees = DegreeSequence::from_undirected(&sym.graph.degrees());
    let m = config.edges.unwrap_or(sym.graph.edge_count() as u64);
    let opts = GenerationOptions {
        chunk_size: config.chunk_size,
        ..Default::default()
    };
    let edges = generate_cl_with(&degrees, m, config.seed, &opts)?;
    let mut header = Provenance::new();
    header
        .push("model", "cl-fit")
        .push("source", config.input.display())
        .push("source-vertices", sym.graph.vertex_count())
        .push("source-edges", sym.graph.edge_count())
        .push("edges", m)
        .push("seed", config.seed)
        .push("chunk-size", config.chunk_size)
        .push("vertices", edges.vertex_count());
    write_edges_file(out, &header, &edges)?;
    Ok(GenerateSummary {
        path: out.to_path_buf(),
        vertices: edges.vertex_count(),
        edges: m,
        header,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalyzeOptions {
    pub metrics: Vec<Metric>,
    pub eigenvalues: usize,
    /// Also write an `r x r` spy raster.
    pub spy_resolution: Option<usize>,
    pub eigen: EigenOptions,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            metrics: Metric::ALL.to_vec(),
            eigenvalues: crate::metrics::DEFAULT_EIGENVALUES,
            spy_resolution: None,
            eigen: EigenOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AnalyzeSummary {
    pub report: MetricReport,
    pub vertices: usize,
    pub raw_pairs: usize,
    pub edges: usize,
    pub duplicates: u64,
    pub self_loops: u64,
    /// Eigenvalue count actually computed (clamped to the vertex count).
    pub eigenvalues: usize,
}

fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn write_csv<I, S>(path: &Path, header: &str, rows: I) -> Result<()>
where
    I: IntoIterator<Item = S>,
    S: Display,
{
    create_parent(path)?;
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "{header}")?;
    for r in rows {
        writeln!(w, "{r}")?;
    }
    w.flush()?;
    Ok(())
}

fn write_report(report: &MetricReport, dir: &Path) -> Result<()> {
    if let Some(h) = &report.degree_histogram {
        write_csv(
            &dir.join("degree.csv"),
            "degree,count",
            h.iter().map(|(d, c)| format!("{d},{c}")),
        )?;
    }
    if let Some(cc) = &report.clustering {
        write_csv(
            &dir.join("cc.csv"),
            "degree,mean_cc,vertex_count",
            cc.iter()
                .map(|(d, c)| format!("{d},{},{}", fmt_f64(c.mean), c.vertices)),
        )?;
    }
    if let Some(e) = &report.top_eigenvalues {
        write_csv(
            &dir.join("eig.csv"),
            "rank,value",
            e.iter()
                .enumerate()
                .map(|(r, v)| format!("{},{}", r + 1, fmt_f64(*v))),
        )?;
    }
    if let Some(x) = &report.assortativity {
        write_csv(
            &dir.join("assort.csv"),
            "degree,X_d",
            x.iter().map(|(d, v)| format!("{d},{}", fmt_f64(*v))),
        )?;
    }
    if let Some(k) = &report.core_sizes {
        write_csv(
            &dir.join("core.csv"),
            "k,size",
            k.iter().map(|(k, s)| format!("{k},{s}")),
        )?;
    }
    Ok(())
}

/// Symmetrizes a graph file, computes the requested metrics and writes one
/// CSV per metric into `out_dir`.
pub fn cmd_analyze(input: &Path, opts: &AnalyzeOptions, out_dir: &Path) -> Result<AnalyzeSummary> {
    let raw = read_edge_list_file(input)?;
    let sym = symmetrize(&raw);
    let g = &sym.graph;
    let k = opts.eigenvalues.min(g.vertex_count());
    if k < opts.eigenvalues && opts.metrics.contains(&Metric::Eigenvalues) {
        log::warn!(
            "requested {} eigenvalues of a {}-vertex graph; computing {k}",
            opts.eigenvalues,
            g.vertex_count()
        );
    }
    let report = MetricReport::compute(g, &opts.metrics, k, &opts.eigen)?;
    fs::create_dir_all(out_dir)?;
    write_report(&report, out_dir)?;

    if let Some(r) = opts.spy_resolution {
        let n = raw.vertex_count().next_power_of_two();
        let padded = EdgeList::new(n, raw.edges().to_vec())?;
        let spy = spy_raster(&padded, r)?;
        spy.write_pgm(BufWriter::new(File::create(out_dir.join("spy.pgm"))?))?;
        spy.write_csv(BufWriter::new(File::create(out_dir.join("spy.csv"))?))?;
    }

    let summary = AnalyzeSummary {
        report,
        vertices: g.vertex_count(),
        raw_pairs: raw.len(),
        edges: g.edge_count(),
        duplicates: sym.duplicates,
        self_loops: sym.self_loops,
        eigenvalues: k,
    };
    write_csv(
        &out_dir.join("summary.csv"),
        "statistic,value",
        [
            format!("vertices,{}", summary.vertices),
            format!("raw_pairs,{}", summary.raw_pairs),
            format!("edges,{}", summary.edges),
            format!("duplicates,{}", summary.duplicates),
            format!("self_loops,{}", summary.self_loops),
        ],
    )?;
    Ok(summary)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompareSummary {
    pub a: AnalyzeSummary,
    pub b: AnalyzeSummary,
    pub comparison: Comparison,
}

fn opt_f64(x: Option<f64>) -> String {
    x.map(fmt_f64).unwrap_or_default()
}

/// Analyzes two graphs into `out_dir/a` and `out_dir/b`, then writes the gap
/// summary and side-by-side CSVs for overlay plots.
pub fn cmd_compare(
    a: &Path,
    b: &Path,
    opts: &AnalyzeOptions,
    compare: &CompareOptions,
    out_dir: &Path,
) -> Result<CompareSummary> {
    let sa = cmd_analyze(a, opts, &out_dir.join("a"))?;
    let sb = cmd_analyze(b, opts, &out_dir.join("b"))?;
    let c = compare_reports(&sa.report, &sb.report, compare);
    let (ra, rb) = (&sa.report, &sb.report);

    let mut gaps = vec![
        format!("cc_max_gap,{}", opt_f64(c.clustering_max_gap.map(|x| x.1))),
        format!(
            "cc_max_gap_degree,{}",
            c.clustering_max_gap
                .map(|x| x.0.to_string())
                .unwrap_or_default()
        ),
        format!(
            "eig_max_relative_gap,{}",
            opt_f64(c.eigenvalue_max_relative_gap())
        ),
        format!(
            "core_size_max_relative_gap,{}",
            opt_f64(c.core_size_max_relative_gap)
        ),
        format!("degree_tv_distance,{}", opt_f64(c.degree_tv_distance)),
        format!(
            "assort_max_relative_gap,{}",
            opt_f64(c.assortativity_max_relative_gap)
        ),
    ];
    gaps.extend(
        c.eigenvalue_relative_gaps
            .iter()
            .enumerate()
            .map(|(r, g)| format!("eig_relative_gap_{},{}", r + 1, fmt_f64(*g))),
    );
    write_csv(&out_dir.join("gaps.csv"), "statistic,value", gaps)?;

    if let (Some(x), Some(y)) = (&ra.degree_histogram, &rb.degree_histogram) {
        let keys = union_keys(x.keys(), y.keys());
        write_csv(
            &out_dir.join("degree_pair.csv"),
            "degree,count_a,count_b",
            keys.iter().map(|d| {
                format!(
                    "{d},{},{}",
                    x.get(d).copied().unwrap_or(0),
                    y.get(d).copied().unwrap_or(0)
                )
            }),
        )?;
    }
    if let (Some(x), Some(y)) = (&ra.clustering, &rb.clustering) {
        let keys = union_keys(x.keys(), y.keys());
        write_csv(
            &out_dir.join("cc_pair.csv"),
            "degree,mean_cc_a,mean_cc_b,vertex_count_a,vertex_count_b",
            keys.iter().map(|d| {
                format!(
                    "{d},{},{},{},{}",
                    opt_f64(x.get(d).map(|c| c.mean)),
                    opt_f64(y.get(d).map(|c| c.mean)),
                    x.get(d).map_or(0, |c| c.vertices),
                    y.get(d).map_or(0, |c| c.vertices)
                )
            }),
        )?;
    }
    if let (Some(x), Some(y)) = (&ra.top_eigenvalues, &rb.top_eigenvalues) {
        write_csv(
            &out_dir.join("eig_pair.csv"),
            "rank,value_a,value_b",
            (0..x.len().max(y.len())).map(|r| {
                format!(
                    "{},{},{}",
                    r + 1,
                    opt_f64(x.get(r).copied()),
                    opt_f64(y.get(r).copied())
                )
            }),
        )?;
    }
    if let (Some(x), Some(y)) = (&ra.assortativity, &rb.assortativity) {
        let keys = union_keys(x.keys(), y.keys());
        write_csv(
            &out_dir.join("assort_pair.csv"),
            "degree,X_d_a,X_d_b",
            keys.iter().map(|d| {
                format!(
                    "{d},{},{}",
                    opt_f64(x.get(d).copied()),
                    opt_f64(y.get(d).copied())
                )
            }),
        )?;
    }
    if let (Some(x), Some(y)) = (&ra.core_sizes, &rb.core_sizes) {
        let keys = union_keys(x.keys(), y.keys());
        write_csv(
            &out_dir.join("core_pair.csv"),
            "k,size_a,size_b",
            keys.iter().map(|k| {
                format!(
                    "{k},{},{}",
                    x.get(k).copied().unwrap_or(0),
                    y.get(k).copied().unwrap_or(0)
                )
            }),
        )?;
    }
    Ok(CompareSummary {
        a: sa,
        b: sb,
        comparison: c,
    })
}

fn union_keys<'a>(
    a: impl Iterator<Item = &'a usize>,
    b: impl Iterator<Item = &'a usize>,
) -> Vec<usize> {
    let mut k: Vec<usize> = a.chain(b).copied().collect();
    k.sort_unstable();
    k.dedup();
    k
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumSummary {
    pub max_entry_gap: f64,
    pub skg_distinct: usize,
    pub cl_distinct: usize,
    /// Kronecker mass of entries below `1e-20`.
    pub skg_mass_below: f64,
    /// Kronecker mass in CL bins whose value is below `1e-20`.
    pub binned_mass_below: f64,
}

/// Threshold of the low-probability mass statistic.
pub const LOW_MASS_THRESHOLD: f64 = 1e-20;

/// Writes value spectra, per-class spectra, bins and a summary for `(t, levels)`.
pub fn cmd_spectrum(t: &GeneratorMatrix, levels: u32, out_dir: &Path) -> Result<SpectrumSummary> {
    let skg = skg_spectrum(t, levels)?;
    let cl = cl_spectrum(t, levels)?;
    let bins = bin_skg_into_cl(&skg, &cl)?;
    fs::create_dir_all(out_dir)?;

    for (name, s) in [("skg_spectrum.csv", &skg), ("cl_spectrum.csv", &cl)] {
        write_csv(
            &out_dir.join(name),
            "value,multiplicity",
            s.entries
                .iter()
                .map(|e| format!("{},{}", fmt_f64(e.value), e.multiplicity)),
        )?;
    }
    write_csv(
        &out_dir.join("skg_classes.csv"),
        "source_zeros,sink_zeros,common_zeros,value,multiplicity",
        skg.classes.iter().filter_map(|c| match c.label {
            ClassLabel::Skg(p) => Some(format!(
                "{},{},{},{},{}",
                p.source_zeros,
                p.sink_zeros,
                p.common_zeros,
                fmt_f64(c.value),
                c.multiplicity
            )),
            ClassLabel::Cl { .. } => None,
        }),
    )?;
    write_csv(
        &out_dir.join("cl_classes.csv"),
        "source_zeros,sink_zeros,value,multiplicity",
        cl.classes.iter().filter_map(|c| match c.label {
            ClassLabel::Cl {
                source_zeros,
                sink_zeros,
            } => Some(format!(
                "{source_zeros},{sink_zeros},{},{}",
                fmt_f64(c.value),
                c.multiplicity
            )),
            ClassLabel::Skg(_) => None,
        }),
    )?;
    write_csv(
        &out_dir.join("bins.csv"),
        "bin_value,cl_count,skg_count,cl_mass,skg_mass",
        bins.bins.iter().map(|b| {
            format!(
                "{},{},{},{},{}",
                fmt_f64(b.value),
                b.cl_multiplicity,
                b.skg_count,
                fmt_f64(b.cl_mass),
                fmt_f64(b.skg_mass)
            )
        }),
    )?;

    let summary = SpectrumSummary {
        max_entry_gap: max_entry_gap(t, levels)?,
        skg_distinct: skg.len(),
        cl_distinct: cl.len(),
        skg_mass_below: mass_below(&skg, LOW_MASS_THRESHOLD),
        binned_mass_below: bins.skg_mass_below(LOW_MASS_THRESHOLD),
    };
    write_csv(
        &out_dir.join("summary.csv"),
        "statistic,value",
        [
            format!("generator,{}", format_generator(t)),
            format!("levels,{levels}"),
            format!("max_entry_gap,{}", fmt_f64(summary.max_entry_gap)),
            format!("skg_distinct_values,{}", summary.skg_distinct),
            format!("cl_distinct_values,{}", summary.cl_distinct),
            format!("skg_mass_below_1e-20,{}", fmt_f64(summary.skg_mass_below)),
            format!(
                "binned_skg_mass_below_1e-20,{}",
                fmt_f64(summary.binned_mass_below)
            ),
        ],
    )?;
    Ok(summary)
}
