use rand::Rng;

use super::edges::EdgeList;
use super::generator::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::rng::{stream_rng, NOISE_STREAM};

/// Edges per independently seeded chunk unless overridden.
pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 16;

/// Parameters of a Kronecker model: generator, `levels` = log2 of the vertex
/// count, and the number of edge insertions.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SkgParams {
    pub generator: GeneratorMatrix,
    levels: u32,
    pub edges: u64,
}

impl SkgParams {
    pub const MAX_LEVELS: u32 = 63;

    pub fn new(generator: GeneratorMatrix, levels: u32, edges: u64) -> Result<Self> {
        if levels == 0 || levels > Self::MAX_LEVELS {
            return Err(Error::InvalidLevels(levels, "1..=63"));
        }
        Ok(SkgParams {
            generator,
            levels,
            edges,
        })
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn vertex_count(&self) -> u64 {
        1u64 << self.levels
    }
}

/// Chunking and scheduling for the edge generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenerationOptions {
    /// Edges per chunk. Each chunk draws from its own stream derived from
    /// `(seed, chunk index)`, so output depends on this value but not on the
    /// number of threads.
    pub chunk_size: u64,
    pub execution: Execution,
}

impl Default for GenerationOptions {
    fn default() -> Self {
        GenerationOptions {
            chunk_size: DEFAULT_CHUNK_SIZE,
            execution: Execution::Parallel,
        }
    }
}

impl GenerationOptions {
    pub(crate) fn checked_chunk(&self) -> Result<usize> {
        if self.chunk_size == 0 {
            return Err(Error::InvalidArgument("chunk size must be positive".into()));
        }
        Ok(self.chunk_size as usize)
    }
}

/// Cumulative quadrant thresholds for one descent level.
#[derive(Clone, Copy, Debug)]
struct Quadrants {
    first: f64,
    second: f64,
    third: f64,
}

impl Quadrants {
    fn of(t: &GeneratorMatrix) -> Self {
        Quadrants {
            first: t.t1(),
            second: t.t1() + t.t2(),
            third: 1.0 - t.t4(),
        }
    }

    #[inline]
    fn pick(&self, u: f64) -> (u64, u64) {
        if u < self.first {
            (0, 0)
        } else if u < self.second {
            (0, 1)
        } else if u < self.third {
            (1, 0)
        } else {
            (1, 1)
        }
    }
}

#[inline]
fn descend(levels: &[Quadrants], mut draw: impl FnMut() -> f64) -> (u64, u64) {
    let (mut source, mut sink) = (0u64, 0u64);
    for q in levels {
        let (r, c) = q.pick(draw());
        source = (source << 1) | r;
        sink = (sink << 1) | c;
    }
    (source, sink)
}

/// One edge insertion by recursive quadrant descent. Consumes exactly
/// `levels` uniform draws from `draw`; the first draw decides the most
/// significant bit of both ids.
pub fn skg_sample_edge(params: &SkgParams, draw: impl FnMut() -> f64) -> (u64, u64) {
    let q = vec![Quadrants::of(&params.generator); params.levels as usize];
    descend(&q, draw)
}

fn generate_by_levels(
    levels: &[Quadrants],
    edges: u64,
    seed: u64,
    opts: &GenerationOptions,
) -> Result<Vec<(u64, u64)>> {
    let chunk = opts.checked_chunk()?;
    let mut out = vec![(0u64, 0u64); edges as usize];
    par::for_each_chunk_mut(&mut out, chunk, opts.execution, |c, slot| {
        let mut rng = stream_rng(seed, c as u64);
        for e in slot.iter_mut() {
            *e = descend(levels, || rng.random::<f64>());
        }
    });
    Ok(out)
}

/// Draws `params.edges` independent Kronecker insertions.
pub fn generate_skg(params: &SkgParams, seed: u64) -> EdgeList {
    generate_skg_with(params, seed, &GenerationOptions::default())
        .expect("default options are valid")
}

pub fn generate_skg_with(
    params: &SkgParams,
    seed: u64,
    opts: &GenerationOptions,
) -> Result<EdgeList> {
    let q = vec![Quadrants::of(&params.generator); params.levels as usize];
    let edges = generate_by_levels(&q, params.edges, seed, opts)?;
    Ok(EdgeList::new_unchecked(params.vertex_count(), edges))
}

/// Per-level generators of a noisy Kronecker model.
#[derive(Clone, Debug, PartialEq)]
pub struct NoiseSchedule {
    pub base: GeneratorMatrix,
    pub noise: f64,
    /// `levels[i]` drives descent level `i + 1` (the `i`-th most significant bit).
    pub levels: Vec<GeneratorMatrix>,
}

impl NoiseSchedule {
    /// Largest noise level that keeps every perturbed entry nonnegative.
    pub fn max_noise(t: &GeneratorMatrix) -> f64 {
        t.t2().min(t.t3()).min((t.t1() + t.t4()) / 2.0)
    }

    /// Perturbs `t` by `mu`: off-diagonal entries gain `mu`, the diagonal
    /// loses `2 mu` split in proportion to t1 and t4.
    pub fn perturb(t: &GeneratorMatrix, mu: f64) -> Result<GeneratorMatrix> {
        if mu == 0.0 {
            return Ok(*t);
        }
        let diag = t.t1() + t.t4();
        GeneratorMatrix::new(
            t.t1() - 2.0 * mu * t.t1() / diag,
            t.t2() + mu,
            t.t3() + mu,
            t.t4() - 2.0 * mu * t.t4() / diag,
        )
    }

    /// Expected out/in degrees under the schedule, `edges` insertions total.
    pub fn expected_degrees(&self, edges: u64) -> Result<super::DegreeSequence> {
        let levels = self.levels.len() as u32;
        if levels == 0 || levels > 40 {
            return Err(Error::InvalidLevels(levels, "1..=40"));
        }
        let n = 1usize << levels;
        let m = edges as f64;
        let weight = |v: usize, sums: &dyn Fn(&GeneratorMatrix) -> (f64, f64)| -> f64 {
            let mut w = m;
            for (lvl, t) in self.levels.iter().enumerate() {
                let bit = (v >> (levels as usize - 1 - lvl)) & 1;
                let (zero, one) = sums(t);
                w *= if bit == 0 { zero } else { one };
            }
            w
        };
        let out: Vec<f64> = (0..n).map(|v| weight(v, &|t| t.row_sums())).collect();
        let inw: Vec<f64> = (0..n).map(|v| weight(v, &|t| t.col_sums())).collect();
        super::DegreeSequence::new(out, inw)
    }
}

/// Draws one perturbed generator per level with `mu_i` uniform on `[-b, b)`.
pub fn noise_schedule(
    t: &GeneratorMatrix,
    levels: u32,
    noise: f64,
    seed: u64,
) -> Result<NoiseSchedule> {
    let max = NoiseSchedule::max_noise(t);
    if !(noise >= 0.0 && noise <= max) {
        return Err(Error::NoiseOutOfRange { noise, max });
    }
    let mut rng = stream_rng(seed, NOISE_STREAM);
    let levels = (0..levels)
        .map(|_| {
            let mu = noise * (2.0 * rng.random::<f64>() - 1.0);
            NoiseSchedule::perturb(t, mu)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NoiseSchedule {
        base: *t,
        noise,
        levels,
    })
}

/// Noisy Kronecker generation: level `i` of every descent uses the `i`-th
/// perturbed generator. With `noise = 0` the edge list equals
/// [`generate_skg`] for the same seed and chunking.
pub fn generate_nskg(
    params: &SkgParams,
    noise: f64,
    seed: u64,
) -> Result<(NoiseSchedule, EdgeList)> {
    generate_nskg_with(params, noise, seed, &GenerationOptions::default())
}

pub fn generate_nskg_with(
    params: &SkgParams,
    noise: f64,
    seed: u64,
    opts: &GenerationOptions,
) -> Result<(NoiseSchedule, EdgeList)> {
    let schedule = noise_schedule(&params.generator, params.levels, noise, seed)?;
    let q: Vec<Quadrants> = schedule.levels.iter().map(Quadrants::of).collect();
    let edges = generate_by_levels(&q, params.edges, seed, opts)?;
    Ok((
        schedule,
        EdgeList::new_unchecked(params.vertex_count(), edges),
    ))
}
