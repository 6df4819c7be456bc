use num_bigint::BigUint;
use num_traits::Zero;

use super::spectrum::{entry_mass, ModelKind, ValueSpectrum};
use crate::error::{Error, Result};

/// One CL value with the Kronecker entries nearest to it.
#[derive(Clone, Debug, PartialEq)]
pub struct Bin {
    pub value: f64,
    pub cl_multiplicity: BigUint,
    pub skg_count: BigUint,
    pub cl_mass: f64,
    pub skg_mass: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinReport {
    /// In CL value order, largest first.
    pub bins: Vec<Bin>,
    pub total_skg_count: BigUint,
    pub total_cl_count: BigUint,
    pub total_skg_mass: f64,
    pub total_cl_mass: f64,
}

impl BinReport {
    /// Kronecker mass in bins whose CL value is below `threshold`.
    pub fn skg_mass_below(&self, threshold: f64) -> f64 {
        self.bins
            .iter()
            .rev()
            .filter(|b| b.value < threshold)
            .map(|b| b.skg_mass)
            .sum()
    }
}

/// Index of the value in `desc` (sorted descending) nearest to `v`; an exact
/// tie goes to the larger value.
fn nearest(desc: &[f64], v: f64) -> usize {
    // First index whose value is <= v.
    let k = desc.partition_point(|&x| x > v);
    if k == 0 {
        return 0;
    }
    if k == desc.len() {
        return k - 1;
    }
    let above = desc[k - 1] - v;
    let below = v - desc[k];
    if above <= below {
        k - 1
    } else {
        k
    }
}

/// Assigns every distinct Kronecker value to the CL bin with the closest
/// value and accumulates counts and probability mass per bin.
pub fn bin_skg_into_cl(skg: &ValueSpectrum, cl: &ValueSpectrum) -> Result<BinReport> {
    if skg.levels != cl.levels {
        return Err(Error::MismatchedLevels(skg.levels, cl.levels));
    }
    if skg.model != ModelKind::Skg || cl.model != ModelKind::Cl {
        return Err(Error::InvalidArgument(
            "expected a Kronecker spectrum and a CL spectrum".into(),
        ));
    }
    let cl_values: Vec<f64> = cl.entries.iter().map(|e| e.value).collect();
    let mut bins: Vec<Bin> = cl
        .entries
        .iter()
        .map(|e| Bin {
            value: e.value,
            cl_multiplicity: e.multiplicity.clone(),
            skg_count: BigUint::zero(),
            cl_mass: entry_mass(e.value, &e.multiplicity),
            skg_mass: 0.0,
        })
        .collect();
    // Smallest values first so each bin's mass sums small terms first.
    for e in skg.entries.iter().rev() {
        let b = &mut bins[nearest(&cl_values, e.value)];
        b.skg_count += &e.multiplicity;
        b.skg_mass += entry_mass(e.value, &e.multiplicity);
    }
    Ok(BinReport {
        total_skg_count: bins.iter().map(|b| &b.skg_count).sum(),
        total_cl_count: bins.iter().map(|b| &b.cl_multiplicity).sum(),
        total_skg_mass: bins.iter().rev().map(|b| b.skg_mass).sum(),
        total_cl_mass: bins.iter().rev().map(|b| b.cl_mass).sum(),
        bins,
    })
}
