use super::alias::AliasTable;
use super::edges::EdgeList;
use super::generator::GeneratorMatrix;
use super::skg::GenerationOptions;
use crate::error::{Error, Result};
use crate::par;
use crate::rng::stream_rng;

/// Relative tolerance for `sum(out) == sum(in)`.
const BALANCE_TOLERANCE: f64 = 1e-9;

/// Per-vertex out- and in-weights of a Chung-Lu model. Both sequences sum to
/// the same total.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeSequence {
    out_weights: Vec<f64>,
    in_weights: Vec<f64>,
    total: f64,
}

impl DegreeSequence {
    pub fn new(out_weights: Vec<f64>, in_weights: Vec<f64>) -> Result<Self> {
        if out_weights.len() != in_weights.len() {
            return Err(Error::InvalidDegrees(format!(
                "{} out-weights but {} in-weights",
                out_weights.len(),
                in_weights.len()
            )));
        }
        if out_weights
            .iter()
            .chain(&in_weights)
            .any(|w| !(w.is_finite() && *w >= 0.0))
        {
            return Err(Error::InvalidDegrees(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let out_total: f64 = out_weights.iter().sum();
        let in_total: f64 = in_weights.iter().sum();
        if (out_total - in_total).abs() > BALANCE_TOLERANCE * out_total.max(in_total) {
            return Err(Error::InvalidDegrees(format!(
                "out-weights sum to {out_total} but in-weights sum to {in_total}"
            )));
        }
        Ok(DegreeSequence {
            out_weights,
            in_weights,
            total: out_total,
        })
    }

    /// Undirected fit: every vertex uses its degree as both weights.
    pub fn from_undirected(degrees: &[usize]) -> Self {
        let w: Vec<f64> = degrees.iter().map(|&d| d as f64).collect();
        let total = w.iter().sum();
        DegreeSequence {
            out_weights: w.clone(),
            in_weights: w,
            total,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out_weights.len()
    }

    pub fn out_weights(&self) -> &[f64] {
        &self.out_weights
    }

    pub fn in_weights(&self) -> &[f64] {
        &self.in_weights
    }

    pub fn total(&self) -> f64 {
        self.total
    }
}

/// Expected out- and in-degree of every vertex of a Kronecker model with
/// `edges` insertions: a vertex with `z` zero bits has out-weight
/// `m (t1+t2)^z (t3+t4)^(levels-z)` and in-weight `m (t1+t3)^z (t2+t4)^(levels-z)`.
pub fn expected_degrees(t: &GeneratorMatrix, levels: u32, edges: u64) -> Result<DegreeSequence> {
    if levels == 0 || levels > 40 {
        return Err(Error::InvalidLevels(levels, "1..=40"));
    }
    let m = edges as f64;
    let (r0, r1) = t.row_sums();
    let (c0, c1) = t.col_sums();
    // Weights depend only on the zero count; tabulate once.
    let out_by_zeros: Vec<f64> = (0..=levels)
        .map(|z| m * r0.powi(z as i32) * r1.powi((levels - z) as i32))
        .collect();
    let in_by_zeros: Vec<f64> = (0..=levels)
        .map(|z| m * c0.powi(z as i32) * c1.powi((levels - z) as i32))
        .collect();
    let n = 1usize << levels;
    let zeros = |v: usize| (levels - (v as u64).count_ones()) as usize;
    let mut out = vec![0.0; n];
    let mut inw = vec![0.0; n];
    par::fill(&mut out, Default::default(), |v| out_by_zeros[zeros(v)]);
    par::fill(&mut inw, Default::default(), |v| in_by_zeros[zeros(v)]);
    DegreeSequence::new(out, inw)
}

/// Degree sequence of the CL model associated with a Kronecker model.
pub fn associated_cl(t: &GeneratorMatrix, levels: u32, edges: u64) -> Result<DegreeSequence> {
    expected_degrees(t, levels, edges)
}

/// CL edge probability for a single insertion: `out(i) * in(j) / total^2`.
pub fn cl_entry(degrees: &DegreeSequence, source: usize, sink: usize) -> f64 {
    degrees.out_weights[source] * degrees.in_weights[sink] / (degrees.total * degrees.total)
}

/// Draws `edges` CL insertions: each source from the out-weights, each sink
/// independently from the in-weights.
pub fn generate_cl(degrees: &DegreeSequence, edges: u64, seed: u64) -> Result<EdgeList> {
    generate_cl_with(degrees, edges, seed, &GenerationOptions::default())
}

pub fn generate_cl_with(
    degrees: &DegreeSequence,
    edges: u64,
    seed: u64,
    opts: &GenerationOptions,
) -> Result<EdgeList> {
    if degrees.total <= 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    let chunk = opts.checked_chunk()?;
    let sources = AliasTable::new(&degrees.out_weights)?;
    let sinks = AliasTable::new(&degrees.in_weights)?;
    let mut out = vec![(0u64, 0u64); edges as usize];
    par::for_each_chunk_mut(&mut out, chunk, opts.execution, |c, slot| {
        let mut rng = stream_rng(seed, c as u64);
        for e in slot.iter_mut() {
            let u = sources.sample(&mut rng) as u64;
            let v = sinks.sample(&mut rng) as u64;
            *e = (u, v);
        }
    });
    Ok(EdgeList::new_unchecked(degrees.vertex_count() as u64, out))
}
