use crate::error::{Error, Result};

/// The 2x2 generator `[t1 t2; t3 t4]` of a Kronecker model.
///
/// Row index is the source bit and column index the sink bit of one descent
/// level: t1 = (0,0), t2 = (0,1), t3 = (1,0), t4 = (1,1).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorMatrix {
    t: [f64; 4],
}

impl GeneratorMatrix {
    /// Allowed absolute deviation of the entry sum from 1.
    pub const SUM_TOLERANCE: f64 = 1e-12;

    pub fn new(t1: f64, t2: f64, t3: f64, t4: f64) -> Result<Self> {
        let t = [t1, t2, t3, t4];
        for (i, &value) in t.iter().enumerate() {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::NegativeEntry {
                    index: i + 1,
                    value,
                });
            }
        }
        let sum: f64 = t.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        Ok(GeneratorMatrix { t })
    }

    pub fn uniform() -> Self {
        GeneratorMatrix { t: [0.25; 4] }
    }

    /// `[0.57 0.19; 0.19 0.05]`, the Graph500 benchmark generator.
    pub fn graph500() -> Self {
        GeneratorMatrix {
            t: [0.57, 0.19, 0.19, 0.05],
        }
    }

    pub fn entries(&self) -> [f64; 4] {
        self.t
    }

    pub fn t1(&self) -> f64 {
        self.t[0]
    }
    pub fn t2(&self) -> f64 {
        self.t[1]
    }
    pub fn t3(&self) -> f64 {
        self.t[2]
    }
    pub fn t4(&self) -> f64 {
        self.t[3]
    }

    /// Probability that one level emits a 0 (resp. 1) source bit.
    pub fn row_sums(&self) -> (f64, f64) {
        (self.t[0] + self.t[1], self.t[2] + self.t[3])
    }

    /// Probability that one level emits a 0 (resp. 1) sink bit.
    pub fn col_sums(&self) -> (f64, f64) {
        (self.t[0] + self.t[2], self.t[1] + self.t[3])
    }

    /// Entry of the `levels`-fold Kronecker power for a bit profile.
    pub fn skg_value(&self, p: &BitProfile) -> f64 {
        let [t1, t2, t3, t4] = self.t;
        t1.powi(p.common_zeros as i32)
            * t2.powi((p.source_zeros - p.common_zeros) as i32)
            * t3.powi((p.sink_zeros - p.common_zeros) as i32)
            * t4.powi(p.common_ones() as i32)
    }

    /// Entry of the associated CL matrix; depends only on the zero counts.
    pub fn cl_value(&self, levels: u32, source_zeros: u32, sink_zeros: u32) -> f64 {
        let (r0, r1) = self.row_sums();
        let (c0, c1) = self.col_sums();
        r0.powi(source_zeros as i32)
            * r1.powi((levels - source_zeros) as i32)
            * c0.powi(sink_zeros as i32)
            * c1.powi((levels - sink_zeros) as i32)
    }
}

impl std::fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.t;
        write!(f, "[{a}, {b}; {c}, {d}]")
    }
}

/// Validates four raw entries into a [`GeneratorMatrix`].
pub fn validate_generator(t1: f64, t2: f64, t3: f64, t4: f64) -> Result<GeneratorMatrix> {
    GeneratorMatrix::new(t1, t2, t3, t4)
}

/// True iff `t1/t2 = t3/t4` up to `tol`, tested as `|t1*t4 - t2*t3| <= tol`.
/// When it holds the Kronecker and associated CL matrices coincide.
pub fn check_ratio_condition(t: &GeneratorMatrix, tol: f64) -> Result<bool> {
    if t.t2() == 0.0 || t.t4() == 0.0 {
        return Err(Error::DegenerateMatrix);
    }
    Ok((t.t1() * t.t4() - t.t2() * t.t3()).abs() <= tol)
}

/// Zero-bit statistics of a (source, sink) pair of `levels`-bit ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitProfile {
    pub levels: u32,
    pub source_zeros: u32,
    pub sink_zeros: u32,
    pub common_zeros: u32,
}

impl BitProfile {
    pub fn of(levels: u32, source: u64, sink: u64) -> Self {
        debug_assert!(levels <= 64);
        let mask = if levels == 64 {
            u64::MAX
        } else {
            (1u64 << levels) - 1
        };
        let (i, j) = (source & mask, sink & mask);
        BitProfile {
            levels,
            source_zeros: levels - i.count_ones(),
            sink_zeros: levels - j.count_ones(),
            common_zeros: levels - (i | j).count_ones(),
        }
    }

    /// Positions where both ids have a 1 bit.
    pub fn common_ones(&self) -> u32 {
        self.levels + self.common_zeros - self.source_zeros - self.sink_zeros
    }

    /// Every profile realised by some pair of `levels`-bit ids.
    pub fn all(levels: u32) -> impl Iterator<Item = BitProfile> {
        (0..=levels).flat_map(move |zi| {
            (0..=levels).flat_map(move |zj| {
                let lo = (zi + zj).saturating_sub(levels);
                (lo..=zi.min(zj)).map(move |cz| BitProfile {
                    levels,
                    source_zeros: zi,
                    sink_zeros: zj,
                    common_zeros: cz,
                })
            })
        })
    }
}

/// Probability that one Kronecker edge insertion lands on `(source, sink)`.
pub fn skg_entry(t: &GeneratorMatrix, levels: u32, source: u64, sink: u64) -> f64 {
    t.skg_value(&BitProfile::of(levels, source, sink))
}
