//! Closed-form analysis of the Kronecker and associated Chung-Lu probability
//! matrices.
//!
//! Entries of both matrices depend only on the [`BitProfile`] of a cell, so
//! everything here works on O(levels^3) profile classes and never forms an
//! n x n matrix.
//!
//! [`BitProfile`]: crate::models::BitProfile

mod binning;
mod spectrum;
mod spy;

pub use binning::{bin_skg_into_cl, Bin, BinReport};
pub use spectrum::{
    cl_spectrum, mass_below, max_entry_gap, skg_spectrum, ClassLabel, ClassValue, ModelKind,
    SpectrumEntry, ValueSpectrum, MAX_SPECTRUM_LEVELS,
};
pub use spy::{spy_raster, SpyRaster};
