//! Zero-phase alignment of wavelet coefficients by circular shifting.
//!
//! The level-`j` equivalent wavelet filter of a filter with scaling-filter
//! centre of energy `c` delays its input by approximately
//! `2^(j-1) (L - 1) - c` samples; the level-`J` scaling filter by
//! `(2^J - 1) c`. Both are exact for linear-phase filters (Haar) and match the
//! usual integer advances for the least asymmetric family.

use super::{QmfFilter, TransformKind, WaveletDecomposition};
use crate::error::{Error, Result};

/// Group delay of the level-`j` equivalent wavelet filter.
pub fn wavelet_delay(filter: &QmfFilter, j: usize) -> f64 {
    let l = filter.len() as f64;
    2f64.powi(j as i32 - 1) * (l - 1.0) - filter.energy_centre()
}

/// Group delay of the level-`j` equivalent scaling filter.
pub fn scaling_delay(filter: &QmfFilter, j: usize) -> f64 {
    (2f64.powi(j as i32) - 1.0) * filter.energy_centre()
}

/// Left circular shifts applied by [`align`]: `aligned[k] = raw[(k + shift) mod n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlignmentShifts {
    pub wavelet: Vec<usize>,
    pub scaling: usize,
}

fn shift_for(kind: TransformKind, delay: f64, j: usize, len: usize) -> usize {
    let d = delay.round().max(0.0) as usize;
    let s = match kind {
        TransformKind::Modwt => d,
        // DWT coefficient t sits at time 2^j (t + 1) - 1 - d; start at the
        // first coefficient whose time is non-negative.
        TransformKind::Dwt => {
            let step = 1usize << j;
            (d + 1).div_ceil(step) - 1
        }
    };
    s % len.max(1)
}

pub fn alignment_shifts(
    kind: TransformKind,
    filter: &QmfFilter,
    levels: usize,
    n: usize,
) -> AlignmentShifts {
    let len = |j: usize| match kind {
        TransformKind::Dwt => n >> j,
        TransformKind::Modwt => n,
    };
    let wavelet = (1..=levels)
        .map(|j| shift_for(kind, wavelet_delay(filter, j), j, len(j)))
        .collect();
    let scaling = shift_for(kind, scaling_delay(filter, levels), levels, len(levels));
    AlignmentShifts { wavelet, scaling }
}

/// Circularly shifts every level so coefficient indices line up with time.
///
/// Aligning an already aligned decomposition is an error.
pub fn align(d: &WaveletDecomposition) -> Result<WaveletDecomposition> {
    if d.aligned {
        return Err(Error::AlreadyAligned);
    }
    d.validate()?;
    let shifts = alignment_shifts(d.kind, &d.filter, d.levels, d.original_length);
    let mut out = d.clone();
    for (w, s) in out.wavelet.iter_mut().zip(&shifts.wavelet) {
        w.rotate_left(*s);
    }
    out.scaling.rotate_left(shifts.scaling);
    out.aligned = true;
    Ok(out)
}

/// Undoes [`align`].
pub fn unalign(d: &WaveletDecomposition) -> Result<WaveletDecomposition> {
    if !d.aligned {
        return Err(Error::NotAligned);
    }
    d.validate()?;
    let shifts = alignment_shifts(d.kind, &d.filter, d.levels, d.original_length);
    let mut out = d.clone();
    for (w, s) in out.wavelet.iter_mut().zip(&shifts.wavelet) {
        w.rotate_right(*s);
    }
    out.scaling.rotate_right(shifts.scaling);
    out.aligned = false;
    Ok(out)
}
