//! Parallel against sequential execution for the two data-parallel loops:
//! wavelet levels within one de-noising run, and datasets within a benchmark.

use caravan::bench::{run_benchmark, BenchSpec, Estimator, TestFunction};
use caravan::denoise::{denoise, DenoiseConfig, Method};
use caravan::par::Execution;
use caravan::sampler::ChainConfig;
use caravan::wavelet::TransformKind;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Execution); 2] = [
    ("parallel", Execution::Parallel),
    ("sequential", Execution::Sequential),
];

fn noisy_signal(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| {
            let t = i as f64 / n as f64;
            (t * (1.0 - t)).sqrt() * (2.0 * std::f64::consts::PI * 1.05 / (t + 0.05)).sin() * 4.0
                + 0.3 * (((i * 7919) % 101) as f64 / 50.0 - 1.0)
        })
        .collect()
}

fn levels(c: &mut Criterion) {
    let mut group = c.benchmark_group("denoise_levels");
    group.sample_size(10);
    for transform in [TransformKind::Dwt, TransformKind::Modwt] {
        let x = noisy_signal(512);
        for (name, execution) in MODES {
            let cfg = DenoiseConfig {
                chain: ChainConfig::with_iterations(2_000).seed(3),
                execution,
                ..DenoiseConfig::new(transform)
            };
            group.bench_with_input(BenchmarkId::new(name, transform), &x, |b, x| {
                b.iter(|| denoise(black_box(x), &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn datasets(c: &mut Criterion) {
    let mut group = c.benchmark_group("benchmark_datasets");
    group.sample_size(10);
    for (label, method, iterations) in [
        ("caravan", Method::CaravanMean, 1_000),
        ("hard", Method::HardThreshold, 1),
    ] {
        for (name, execution) in MODES {
            let cfg = DenoiseConfig {
                method,
                chain: ChainConfig::with_iterations(iterations),
                ..DenoiseConfig::new(TransformKind::Dwt)
            };
            let spec = BenchSpec {
                functions: TestFunction::ALL[..4].to_vec(),
                n: 256,
                snr_values: vec![7.0],
                replicates: 4,
                estimators: vec![Estimator::Denoise(cfg)],
                seed: 1,
                iteration_overrides: Vec::new(),
                execution,
            };
            group.bench_function(BenchmarkId::new(name, label), |b| {
                b.iter(|| run_benchmark(black_box(&spec)).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, levels, datasets);
criterion_main!(benches);
