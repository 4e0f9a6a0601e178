use super::{unalign, wrap, QmfFilter, TransformKind, WaveletDecomposition};
use crate::error::{Error, Result};

fn rescaled(f: &[f64]) -> Vec<f64> {
    f.iter()
        .map(|c| c * std::f64::consts::FRAC_1_SQRT_2)
        .collect()
}

/// Maximal overlap DWT with periodic boundaries.
///
/// Level `j` filters the previous scaling coefficients with the rescaled
/// filters `f / sqrt 2` upsampled by `2^(j-1)`:
/// `w_j[t] = sum_l g~[l] * v_{j-1}[(t - 2^(j-1) l) mod N]`. No dyadic
/// requirement on `N`.
pub fn modwt_forward(x: &[f64], filter: &QmfFilter, levels: usize) -> Result<WaveletDecomposition> {
    if levels == 0 {
        return Err(Error::InvalidLevels(levels));
    }
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    let n = x.len();
    let lo = rescaled(filter.lowpass());
    let hi = rescaled(filter.highpass());
    let mut v = x.to_vec();
    let mut wavelet = Vec::with_capacity(levels);
    for j in 1..=levels {
        let stride = 1isize << (j - 1);
        let mut w = vec![0.0; n];
        let mut next = vec![0.0; n];
        for t in 0..n {
            let (mut s, mut d) = (0.0, 0.0);
            for (l, (h, g)) in lo.iter().zip(&hi).enumerate() {
                let val = v[wrap(t as isize - stride * l as isize, n)];
                s += h * val;
                d += g * val;
            }
            next[t] = s;
            w[t] = d;
        }
        wavelet.push(w);
        v = next;
    }
    Ok(WaveletDecomposition {
        kind: TransformKind::Modwt,
        filter: filter.clone(),
        levels,
        wavelet,
        scaling: v,
        original_length: n,
        aligned: false,
    })
}

/// Pyramid synthesis for the MODWT; exact on the range of [`modwt_forward`].
pub fn modwt_inverse(d: &WaveletDecomposition) -> Result<Vec<f64>> {
    if d.kind != TransformKind::Modwt {
        return Err(Error::InconsistentDecomposition(
            "expected a MODWT decomposition".into(),
        ));
    }
    d.validate()?;
    if d.aligned {
        return modwt_inverse(&unalign(d)?);
    }
    let n = d.original_length;
    let lo = rescaled(d.filter.lowpass());
    let hi = rescaled(d.filter.highpass());
    let mut v = d.scaling.clone();
    for j in (1..=d.levels).rev() {
        let stride = 1isize << (j - 1);
        let w = &d.wavelet[j - 1];
        let mut prev = vec![0.0; n];
        for (t, out) in prev.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (l, (h, g)) in lo.iter().zip(&hi).enumerate() {
                let idx = wrap(t as isize + stride * l as isize, n);
                acc += g * w[idx] + h * v[idx];
            }
            *out = acc;
        }
        v = prev;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavelet::{dwt_forward, FilterName};

    fn test_signal(n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| ((i as f64) * 0.37).sin() * 3.0 + ((i * 13) % 7) as f64)
            .collect()
    }

    #[test]
    fn constant_input_has_zero_wavelet_levels() {
        for name in FilterName::ALL {
            let d = modwt_forward(&vec![3.0; 100], &QmfFilter::new(name), 4).unwrap();
            for w in &d.wavelet {
                assert!(w.iter().all(|v| v.abs() < 1e-12));
            }
            assert!(d.scaling.iter().all(|v| (v - 3.0).abs() < 1e-12));
        }
    }

    #[test]
    fn non_dyadic_length() {
        let x = test_signal(500);
        let d = modwt_forward(&x, &QmfFilter::new(FilterName::La8), 3).unwrap();
        assert_eq!(d.wavelet.len(), 3);
        assert!(d.wavelet.iter().all(|w| w.len() == 500));
        let back = modwt_inverse(&d).unwrap();
        let err = back
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(err < 1e-10);
    }

    #[test]
    fn subsampled_modwt_is_dwt() {
        // w_{j,t} = 2^{j/2} w~_{j, 2^j (t + 1) - 1}
        let x = test_signal(512);
        for name in [FilterName::Haar, FilterName::La8] {
            let f = QmfFilter::new(name);
            let d = dwt_forward(&x, &f, 3).unwrap();
            let m = modwt_forward(&x, &f, 3).unwrap();
            for j in 1..=3usize {
                let step = 1usize << j;
                let scale = 2f64.powf(j as f64 / 2.0);
                for (t, w) in d.wavelet[j - 1].iter().enumerate() {
                    let u = step * (t + 1) - 1;
                    assert!((w - scale * m.wavelet[j - 1][u]).abs() < 1e-10);
                }
            }
            let step = 8;
            for (t, v) in d.scaling.iter().enumerate() {
                let u = step * (t + 1) - 1;
                assert!((v - 2f64.powf(1.5) * m.scaling[u]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn modified_coefficients_still_invert() {
        let x = test_signal(300);
        let mut d = modwt_forward(&x, &QmfFilter::new(FilterName::La8), 4).unwrap();
        for w in &mut d.wavelet {
            for c in w.iter_mut() {
                if c.abs() < 0.5 {
                    *c = 0.0;
                }
            }
        }
        let y = modwt_inverse(&d).unwrap();
        assert_eq!(y.len(), 300);
        assert!(y.iter().all(|v| v.is_finite()));
    }
}
