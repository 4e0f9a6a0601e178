//! Property tests of the periodic transforms and an explicit-matrix oracle.

use caravan::wavelet::{
    align, dwt_forward, dwt_inverse, inverse, make_filter, modwt_forward, modwt_inverse, mra,
    unalign, FilterName, QmfFilter, TransformKind, WaveletDecomposition,
};
use caravan::Error;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;

fn filter_strategy() -> impl Strategy<Value = QmfFilter> {
    prop::sample::select(FilterName::ALL.to_vec()).prop_map(QmfFilter::new)
}

/// A signal whose length is a multiple of `2^levels`, together with `levels`.
fn dyadic_signal() -> impl Strategy<Value = (Vec<f64>, usize)> {
    (1usize..=6, 1usize..=4).prop_flat_map(|(levels, k)| {
        let n = k << levels;
        (prop::collection::vec(-10.0f64..10.0, n), Just(levels))
    })
}

fn sum_sq(xs: &[f64]) -> f64 {
    xs.iter().map(|v| v * v).sum()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Level-`j` analysis matrices built straight from the filter definition:
/// row `t` of a block of size `m/2 x m` holds `f[l]` at column
/// `(2t + 1 - l) mod m`.
fn step_matrix(f: &[f64], m: usize) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(m / 2, m);
    for t in 0..m / 2 {
        for (l, c) in f.iter().enumerate() {
            let col = (2 * t + 1 + m * f.len() - l) % m;
            a[(t, col)] += c;
        }
    }
    a
}

/// The full orthogonal matrix `W` stacking `W_1, W_2 V_1, ..., V_J ... V_1`.
fn dwt_matrix(filter: &QmfFilter, n: usize, levels: usize) -> DMatrix<f64> {
    let mut rows: Vec<DMatrix<f64>> = Vec::new();
    let mut v_chain = DMatrix::<f64>::identity(n, n);
    let mut m = n;
    for _ in 0..levels {
        let w = step_matrix(filter.highpass(), m) * &v_chain;
        let v = step_matrix(filter.lowpass(), m) * &v_chain;
        rows.push(w);
        v_chain = v;
        m /= 2;
    }
    rows.push(v_chain);
    let mut out = DMatrix::zeros(n, n);
    let mut r = 0;
    for block in rows {
        out.view_mut((r, 0), (block.nrows(), n)).copy_from(&block);
        r += block.nrows();
    }
    out
}

fn flatten(d: &WaveletDecomposition) -> Vec<f64> {
    d.wavelet
        .iter()
        .flatten()
        .chain(&d.scaling)
        .copied()
        .collect()
}

#[test]
fn pyramid_equals_explicit_matrix() {
    for name in FilterName::ALL {
        let f = QmfFilter::new(name);
        for (n, levels) in [(4, 1), (8, 2), (8, 3), (16, 2), (16, 4), (32, 3), (32, 5)] {
            let w = dwt_matrix(&f, n, levels);
            let gram = w.transpose() * &w;
            let off = (gram - DMatrix::<f64>::identity(n, n)).abs().max();
            assert!(off < 1e-12, "{name} n={n} J={levels}: {off}");

            for seed in 0..3u64 {
                let x: Vec<f64> = (0..n)
                    .map(|i| {
                        (((i as u64 + 3) * (seed + 7) * 2654435761) % 1000) as f64 / 100.0 - 5.0
                    })
                    .collect();
                let d = dwt_forward(&x, &f, levels).unwrap();
                let via_matrix = &w * DVector::from_vec(x.clone());
                assert!(max_abs_diff(&flatten(&d), via_matrix.as_slice()) < 1e-12);
            }

            // synthesis from the scaling block alone is V^T v
            let mut d = dwt_forward(&vec![0.0; n], &f, levels).unwrap();
            let vj: Vec<f64> = (0..d.scaling.len()).map(|k| 1.0 + k as f64).collect();
            d.scaling = vj.clone();
            let vt = w.rows(n - vj.len(), vj.len()).transpose() * DVector::from_vec(vj);
            assert!(max_abs_diff(&dwt_inverse(&d).unwrap(), vt.as_slice()) < 1e-12);
        }
    }
}

#[test]
fn haar_four_point_example() {
    let f = make_filter("haar").unwrap();
    let w = dwt_matrix(&f, 4, 1);
    let x = [4.0, 2.0, 6.0, 0.0];
    let d = dwt_forward(&x, &f, 1).unwrap();
    let expected = &w * DVector::from_row_slice(&x);
    assert!(max_abs_diff(&flatten(&d), expected.as_slice()) < 1e-12);
}

#[test]
fn long_round_trips() {
    let x: Vec<f64> = (0..512)
        .map(|i| ((i * 37 % 101) as f64).sin() * 3.0)
        .collect();
    let f = QmfFilter::new(FilterName::La8);
    let d = dwt_forward(&x, &f, 6).unwrap();
    assert!(max_abs_diff(&dwt_inverse(&d).unwrap(), &x) < 1e-10);
    let y = &x[..300];
    let m = modwt_forward(y, &f, 4).unwrap();
    assert!(max_abs_diff(&modwt_inverse(&m).unwrap(), y) < 1e-10);
    assert!(modwt_inverse(&m.zeroed())
        .unwrap()
        .iter()
        .all(|v| *v == 0.0));
}

#[test]
fn bumps_mra_details_concentrate_at_bumps() {
    use caravan::bench::{gen_test_function, TestFunction};
    let x = gen_test_function(TestFunction::Bumps, 512).unwrap();
    let d = dwt_forward(&x, &QmfFilter::new(FilterName::La8), 4).unwrap();
    let m = mra(&d).unwrap();
    // fraction of the finest-detail energy within 12 samples of a bump centre
    let near = |i: usize| {
        [
            0.1, 0.13, 0.15, 0.23, 0.25, 0.4, 0.44, 0.65, 0.76, 0.78, 0.81,
        ]
        .iter()
        .any(|t: &f64| ((i + 1) as f64 - t * 512.0).abs() <= 12.0)
    };
    let total = sum_sq(&m.details[0]);
    let local: f64 = m.details[0]
        .iter()
        .enumerate()
        .filter(|(i, _)| near(*i))
        .map(|(_, v)| v * v)
        .sum();
    assert!(local / total > 0.95, "{}", local / total);
}

#[test]
fn dwt_rejects_bad_requests() {
    let f = QmfFilter::new(FilterName::Haar);
    assert!(matches!(
        dwt_forward(&[1.0; 12], &f, 3),
        Err(Error::LengthNotMultiple { .. })
    ));
    assert!(matches!(
        dwt_forward(&[1.0; 8], &f, 0),
        Err(Error::InvalidLevels(0))
    ));
    assert!(modwt_forward(&[1.0; 7], &f, 3).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn dwt_preserves_energy_and_inverts(f in filter_strategy(), (x, levels) in dyadic_signal()) {
        let d = dwt_forward(&x, &f, levels).unwrap();
        let total: usize = d.wavelet.iter().map(Vec::len).sum::<usize>() + d.scaling.len();
        prop_assert_eq!(total, x.len());
        let e = sum_sq(&x);
        prop_assert!((d.energy() - e).abs() < 1e-10);
        let back = dwt_inverse(&d).unwrap();
        prop_assert!(max_abs_diff(&back, &x) < 1e-10);
    }

    #[test]
    fn modwt_inverts_any_length(f in filter_strategy(), x in prop::collection::vec(-10.0f64..10.0, 1..200), levels in 1usize..=5) {
        let d = modwt_forward(&x, &f, levels).unwrap();
        prop_assert!(d.wavelet.iter().all(|w| w.len() == x.len()));
        prop_assert_eq!(d.scaling.len(), x.len());
        let back = modwt_inverse(&d).unwrap();
        prop_assert!(max_abs_diff(&back, &x) < 1e-10);
        // the MODWT also splits the energy exactly across levels
        let e = sum_sq(&x);
        prop_assert!((d.energy() - e).abs() < 1e-10);
    }

    #[test]
    fn modwt_commutes_with_circular_shifts(f in filter_strategy(), x in prop::collection::vec(-10.0f64..10.0, 8..64), k in 0usize..64, levels in 1usize..=3) {
        let k = k % x.len();
        let mut shifted = x.clone();
        shifted.rotate_right(k);
        let a = modwt_forward(&x, &f, levels).unwrap();
        let b = modwt_forward(&shifted, &f, levels).unwrap();
        for (wa, wb) in a.wavelet.iter().zip(&b.wavelet) {
            let mut r = wa.clone();
            r.rotate_right(k);
            prop_assert!(max_abs_diff(&r, wb) < 1e-10);
        }
    }

    #[test]
    fn mra_adds_up(f in filter_strategy(), (x, levels) in dyadic_signal(), modwt in any::<bool>()) {
        let d = if modwt {
            modwt_forward(&x, &f, levels).unwrap()
        } else {
            dwt_forward(&x, &f, levels).unwrap()
        };
        let m = mra(&d).unwrap();
        prop_assert_eq!(m.details.len(), levels);
        prop_assert!(max_abs_diff(&m.reconstruct(), &x) < 1e-10);
    }

    #[test]
    fn modwt_subsamples_to_dwt(haar in any::<bool>(), (x, levels) in dyadic_signal()) {
        let f = QmfFilter::new(if haar { FilterName::Haar } else { FilterName::La8 });
        let d = dwt_forward(&x, &f, levels).unwrap();
        let m = modwt_forward(&x, &f, levels).unwrap();
        for j in 1..=levels {
            let step = 1usize << j;
            let factor = 2f64.powf(j as f64 / 2.0);
            for (t, w) in d.wavelet[j - 1].iter().enumerate() {
                let from_modwt = factor * m.wavelet[j - 1][step * (t + 1) - 1];
                prop_assert!((w - from_modwt).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn alignment_round_trips(f in filter_strategy(), (x, levels) in dyadic_signal(), modwt in any::<bool>()) {
        let d = if modwt {
            modwt_forward(&x, &f, levels).unwrap()
        } else {
            dwt_forward(&x, &f, levels).unwrap()
        };
        let a = align(&d).unwrap();
        prop_assert!(a.aligned);
        prop_assert!(matches!(align(&a), Err(Error::AlreadyAligned)));
        prop_assert_eq!(unalign(&a).unwrap(), d.clone());
        // aligned input inverts to the same signal
        prop_assert!(max_abs_diff(&inverse(&a).unwrap(), &inverse(&d).unwrap()) < 1e-12);
        prop_assert_eq!(a.kind, if modwt { TransformKind::Modwt } else { TransformKind::Dwt });
    }

    #[test]
    fn constants_have_no_wavelet_energy(f in filter_strategy(), c in -50.0f64..50.0, levels in 1usize..=5) {
        let n = 64;
        let d = dwt_forward(&vec![c; n], &f, levels).unwrap();
        prop_assert!(d.wavelet.iter().flatten().all(|w| w.abs() < 1e-12 * c.abs().max(1.0)));
        let expected = c * 2f64.powf(levels as f64 / 2.0);
        prop_assert!(d.scaling.iter().all(|v| (v - expected).abs() < 1e-11 * c.abs().max(1.0)));
    }
}
