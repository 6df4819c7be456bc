use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::models::{BitProfile, GeneratorMatrix};

/// Largest level count for which spectra are computed.
pub const MAX_SPECTRUM_LEVELS: u32 = 40;

/// Above this level count entry values are evaluated through logarithms.
const LOG_SPACE_LEVELS: u32 = 25;

/// Values closer than this (relative) are treated as one distinct value.
const MERGE_TOLERANCE: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    Skg,
    Cl,
}

/// Which cells an entry value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClassLabel {
    Skg(BitProfile),
    Cl { source_zeros: u32, sink_zeros: u32 },
}

/// One profile class before merging equal values.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassValue {
    pub label: ClassLabel,
    pub value: f64,
    pub multiplicity: BigUint,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: BigUint,
    pub classes: Vec<ClassLabel>,
}

/// Distinct entry values of a probability matrix with exact multiplicities,
/// sorted by value descending.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueSpectrum {
    pub model: ModelKind,
    pub levels: u32,
    pub entries: Vec<SpectrumEntry>,
    /// Per-class values in enumeration order, before merging.
    pub classes: Vec<ClassValue>,
}

impl ValueSpectrum {
    pub fn total_multiplicity(&self) -> BigUint {
        self.entries.iter().map(|e| &e.multiplicity).sum()
    }

    /// Sum of value times multiplicity; 1 for a probability matrix.
    pub fn total_mass(&self) -> f64 {
        mass_of(self.entries.iter())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub(crate) fn entry_mass(value: f64, multiplicity: &BigUint) -> f64 {
    value * multiplicity.to_f64().unwrap_or(f64::INFINITY)
}

/// Summed smallest first.
fn mass_of<'a>(entries: impl DoubleEndedIterator<Item = &'a SpectrumEntry>) -> f64 {
    entries
        .rev()
        .map(|e| entry_mass(e.value, &e.multiplicity))
        .sum()
}

/// Binomial coefficients `C(a, b)` for `a <= levels`.
struct Pascal(Vec<Vec<BigUint>>);

impl Pascal {
    fn new(levels: u32) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(levels as usize + 1);
        for a in 0..=levels as usize {
            let mut row = vec![BigUint::one(); a + 1];
            for b in 1..a {
                row[b] = &rows[a - 1][b - 1] + &rows[a - 1][b];
            }
            rows.push(row);
        }
        Pascal(rows)
    }

    fn choose(&self, a: u32, b: u32) -> &BigUint {
        &self.0[a as usize][b as usize]
    }
}

/// `prod base_k^exp_k`, directly for small level counts and through
/// logarithms above [`LOG_SPACE_LEVELS`].
fn power_product(levels: u32, terms: [(f64, u32); 4]) -> f64 {
    if levels <= LOG_SPACE_LEVELS {
        return terms.iter().map(|&(b, e)| b.powi(e as i32)).product();
    }
    let mut log = 0.0;
    for (base, exp) in terms {
        if exp == 0 {
            continue;
        }
        if base == 0.0 {
            return 0.0;
        }
        log += exp as f64 * base.ln();
    }
    log.exp()
}

fn skg_class_value(t: &GeneratorMatrix, p: &BitProfile) -> f64 {
    power_product(
        p.levels,
        [
            (t.t1(), p.common_zeros),
            (t.t2(), p.source_zeros - p.common_zeros),
            (t.t3(), p.sink_zeros - p.common_zeros),
            (t.t4(), p.common_ones()),
        ],
    )
}

fn cl_class_value(t: &GeneratorMatrix, levels: u32, zi: u32, zj: u32) -> f64 {
    let (r0, r1) = t.row_sums();
    let (c0, c1) = t.col_sums();
    power_product(
        levels,
        [(r0, zi), (r1, levels - zi), (c0, zj), (c1, levels - zj)],
    )
}

fn check_levels(levels: u32) -> Result<()> {
    if levels == 0 || levels > MAX_SPECTRUM_LEVELS {
        return Err(Error::InvalidLevels(levels, "1..=40"));
    }
    Ok(())
}

/// Sorts classes by value descending and merges values equal within
/// [`MERGE_TOLERANCE`].
fn merge(classes: &[ClassValue]) -> Vec<SpectrumEntry> {
    let mut order: Vec<&ClassValue> = classes
        .iter()
        .filter(|c| !c.multiplicity.is_zero())
        .collect();
    order.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.label.cmp(&b.label)));
    let mut out: Vec<SpectrumEntry> = Vec::new();
    for c in order {
        match out.last_mut() {
            Some(last) if (last.value - c.value).abs() <= MERGE_TOLERANCE * last.value.abs() => {
                last.multiplicity += &c.multiplicity;
                last.classes.push(c.label);
            }
            _ => out.push(SpectrumEntry {
                value: c.value,
                multiplicity: c.multiplicity.clone(),
                classes: vec![c.label],
            }),
        }
    }
    out
}

/// Distinct values of the `levels`-fold Kronecker power of `t`.
///
/// A class `(zi, zj, cz)` covers `C(l, zi) C(zi, cz) C(l - zi, zj - cz)` cells,
/// the multinomial `l! / (cz! (zi-cz)! (zj-cz)! (l-zi-zj+cz)!)`.
pub fn skg_spectrum(t: &GeneratorMatrix, levels: u32) -> Result<ValueSpectrum> {
    check_levels(levels)?;
    let pascal = Pascal::new(levels);
    let classes: Vec<ClassValue> = BitProfile::all(levels)
        .map(|p| ClassValue {
            label: ClassLabel::Skg(p),
            value: skg_class_value(t, &p),
            multiplicity: pascal.choose(levels, p.source_zeros)
                * pascal.choose(p.source_zeros, p.common_zeros)
                * pascal.choose(levels - p.source_zeros, p.sink_zeros - p.common_zeros),
        })
        .collect();
    Ok(ValueSpectrum {
        model: ModelKind::Skg,
        levels,
        entries: merge(&classes),
        classes,
    })
}

/// Distinct values of the CL matrix associated with `(t, levels)`. The
/// matrix does not depend on the edge count, so none is taken.
pub fn cl_spectrum(t: &GeneratorMatrix, levels: u32) -> Result<ValueSpectrum> {
    check_levels(levels)?;
    let pascal = Pascal::new(levels);
    let classes: Vec<ClassValue> = (0..=levels)
        .flat_map(|zi| (0..=levels).map(move |zj| (zi, zj)))
        .map(|(zi, zj)| ClassValue {
            label: ClassLabel::Cl {
                source_zeros: zi,
                sink_zeros: zj,
            },
            value: cl_class_value(t, levels, zi, zj),
            multiplicity: pascal.choose(levels, zi) * pascal.choose(levels, zj),
        })
        .collect();
    Ok(ValueSpectrum {
        model: ModelKind::Cl,
        levels,
        entries: merge(&classes),
        classes,
    })
}

/// Total probability of entries strictly below `threshold`.
pub fn mass_below(spectrum: &ValueSpectrum, threshold: f64) -> f64 {
    mass_of(spectrum.entries.iter().filter(|e| e.value < threshold))
}

/// Largest absolute difference between a Kronecker entry and the matching
/// associated CL entry, over every profile class.
pub fn max_entry_gap(t: &GeneratorMatrix, levels: u32) -> Result<f64> {
    check_levels(levels)?;
    Ok(BitProfile::all(levels)
        .map(|p| {
            (skg_class_value(t, &p) - cl_class_value(t, levels, p.source_zeros, p.sink_zeros)).abs()
        })
        .fold(0.0, f64::max))
}
