//! Periodic discrete wavelet transforms (DWT and MODWT) via the pyramid
//! algorithm, multiresolution analysis and zero-phase alignment.

mod align;
mod dwt;
mod filter;
mod modwt;

pub use align::{align, alignment_shifts, scaling_delay, unalign, wavelet_delay, AlignmentShifts};
pub use dwt::{dwt_forward, dwt_inverse};
pub use filter::{make_filter, FilterName, QmfFilter};
pub use modwt::{modwt_forward, modwt_inverse};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TransformKind {
    Dwt,
    Modwt,
}

impl TransformKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            TransformKind::Dwt => "dwt",
            TransformKind::Modwt => "modwt",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dwt" => Ok(TransformKind::Dwt),
            "modwt" => Ok(TransformKind::Modwt),
            other => Err(Error::InvalidConfig(format!(
                "unknown transform `{other}` (expected dwt or modwt)"
            ))),
        }
    }
}

/// Wavelet coefficients `w_1..w_J0` and scaling coefficients `v_J0` of a signal.
///
/// For the DWT level `j` holds `N / 2^j` coefficients; for the MODWT every
/// level holds `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveletDecomposition {
    pub kind: TransformKind,
    pub filter: QmfFilter,
    pub levels: usize,
    /// `wavelet[j - 1]` holds the level-`j` wavelet coefficients.
    pub wavelet: Vec<Vec<f64>>,
    pub scaling: Vec<f64>,
    pub original_length: usize,
    pub aligned: bool,
}

impl WaveletDecomposition {
    /// Expected length of level `j` (1-based) wavelet coefficients.
    pub fn level_len(&self, j: usize) -> usize {
        match self.kind {
            TransformKind::Dwt => self.original_length >> j,
            TransformKind::Modwt => self.original_length,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels == 0 {
            return Err(Error::InvalidLevels(0));
        }
        if self.wavelet.len() != self.levels {
            return Err(Error::InconsistentDecomposition(format!(
                "{} wavelet levels stored but levels = {}",
                self.wavelet.len(),
                self.levels
            )));
        }
        if self.kind == TransformKind::Dwt {
            check_dwt_length(self.original_length, self.levels)?;
        } else if self.original_length == 0 {
            return Err(Error::EmptySignal);
        }
        for (i, w) in self.wavelet.iter().enumerate() {
            let expected = self.level_len(i + 1);
            if w.len() != expected {
                return Err(Error::InconsistentDecomposition(format!(
                    "level {} has {} coefficients, expected {}",
                    i + 1,
                    w.len(),
                    expected
                )));
            }
        }
        let expected = self.level_len(self.levels);
        if self.scaling.len() != expected {
            return Err(Error::InconsistentDecomposition(format!(
                "scaling level has {} coefficients, expected {}",
                self.scaling.len(),
                expected
            )));
        }
        Ok(())
    }

    /// A copy with every coefficient set to zero.
    pub fn zeroed(&self) -> Self {
        let mut out = self.clone();
        out.wavelet.iter_mut().for_each(|w| w.fill(0.0));
        out.scaling.fill(0.0);
        out
    }

    /// Sum of squares of all coefficients.
    pub fn energy(&self) -> f64 {
        self.wavelet
            .iter()
            .flatten()
            .chain(self.scaling.iter())
            .map(|c| c * c)
            .sum()
    }
}

pub(crate) fn check_dwt_length(len: usize, levels: usize) -> Result<()> {
    if levels == 0 {
        return Err(Error::InvalidLevels(levels));
    }
    if len == 0 {
        return Err(Error::EmptySignal);
    }
    let required = 1usize
        .checked_shl(levels as u32)
        .filter(|r| *r <= len)
        .ok_or(Error::LengthNotMultiple {
            len,
            levels,
            required: 1usize.checked_shl(levels as u32).unwrap_or(usize::MAX),
        })?;
    if !len.is_multiple_of(required) {
        return Err(Error::LengthNotMultiple {
            len,
            levels,
            required,
        });
    }
    Ok(())
}

/// Inverse of either transform kind.
pub fn inverse(d: &WaveletDecomposition) -> Result<Vec<f64>> {
    match d.kind {
        TransformKind::Dwt => dwt_inverse(d),
        TransformKind::Modwt => modwt_inverse(d),
    }
}

/// Additive decomposition `x = D_1 + ... + D_J0 + S_J0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MraDecomposition {
    pub details: Vec<Vec<f64>>,
    pub smooth: Vec<f64>,
}

impl MraDecomposition {
    /// Sum of all details and the smooth.
    pub fn reconstruct(&self) -> Vec<f64> {
        let mut out = self.smooth.clone();
        for d in &self.details {
            for (o, v) in out.iter_mut().zip(d) {
                *o += v;
            }
        }
        out
    }
}

/// Multiresolution analysis: each detail is the synthesis of a single
/// wavelet level, the smooth is the synthesis of the scaling coefficients.
pub fn mra(d: &WaveletDecomposition) -> Result<MraDecomposition> {
    d.validate()?;
    let base = if d.aligned { unalign(d)? } else { d.clone() };
    let zero = base.zeroed();
    let mut details = Vec::with_capacity(base.levels);
    for j in 0..base.levels {
        let mut only = zero.clone();
        only.wavelet[j].copy_from_slice(&base.wavelet[j]);
        details.push(inverse(&only)?);
    }
    let mut only = zero;
    only.scaling.copy_from_slice(&base.scaling);
    let smooth = inverse(&only)?;
    Ok(MraDecomposition { details, smooth })
}

#[inline]
pub(crate) fn wrap(i: isize, m: usize) -> usize {
    i.rem_euclid(m as isize) as usize
}
