use super::{check_dwt_length, unalign, wrap, QmfFilter, TransformKind, WaveletDecomposition};
use crate::error::{Error, Result};

/// One analysis step: circular filtering followed by odd decimation.
///
/// `out[t] = sum_l f[l] * v[(2t + 1 - l) mod M]` for both filters.
fn analysis_step(v: &[f64], filter: &QmfFilter, scaling: &mut Vec<f64>, wavelet: &mut Vec<f64>) {
    let m = v.len();
    let half = m / 2;
    let lo = filter.lowpass();
    let hi = filter.highpass();
    scaling.clear();
    wavelet.clear();
    for t in 0..half {
        let base = 2 * t as isize + 1;
        let (mut s, mut w) = (0.0, 0.0);
        for (l, (h, g)) in lo.iter().zip(hi).enumerate() {
            let x = v[wrap(base - l as isize, m)];
            s += h * x;
            w += g * x;
        }
        scaling.push(s);
        wavelet.push(w);
    }
}

/// Transpose of [`analysis_step`]; reconstructs a sequence of twice the length.
fn synthesis_step(scaling: &[f64], wavelet: &[f64], filter: &QmfFilter) -> Vec<f64> {
    let half = scaling.len();
    let m = 2 * half;
    let lo = filter.lowpass();
    let hi = filter.highpass();
    let mut out = vec![0.0; m];
    for t in 0..half {
        let base = 2 * t as isize + 1;
        let (s, w) = (scaling[t], wavelet[t]);
        for (l, (h, g)) in lo.iter().zip(hi).enumerate() {
            out[wrap(base - l as isize, m)] += h * s + g * w;
        }
    }
    out
}

/// Partial DWT with periodic boundaries.
///
/// `x.len()` must be a multiple of `2^levels`.
pub fn dwt_forward(x: &[f64], filter: &QmfFilter, levels: usize) -> Result<WaveletDecomposition> {
    check_dwt_length(x.len(), levels)?;
    let mut v = x.to_vec();
    let mut wavelet = Vec::with_capacity(levels);
    let mut next = Vec::with_capacity(x.len() / 2);
    for _ in 0..levels {
        let mut w = Vec::with_capacity(v.len() / 2);
        analysis_step(&v, filter, &mut next, &mut w);
        wavelet.push(w);
        std::mem::swap(&mut v, &mut next);
    }
    Ok(WaveletDecomposition {
        kind: TransformKind::Dwt,
        filter: filter.clone(),
        levels,
        wavelet,
        scaling: v,
        original_length: x.len(),
        aligned: false,
    })
}

/// Inverse pyramid algorithm. Aligned decompositions are unaligned first.
pub fn dwt_inverse(d: &WaveletDecomposition) -> Result<Vec<f64>> {
    if d.kind != TransformKind::Dwt {
        return Err(Error::InconsistentDecomposition(
            "expected a DWT decomposition".into(),
        ));
    }
    d.validate()?;
    if d.aligned {
        return dwt_inverse(&unalign(d)?);
    }
    let mut v = d.scaling.clone();
    for w in d.wavelet.iter().rev() {
        v = synthesis_step(&v, w, &d.filter);
    }
    Ok(v)
}
