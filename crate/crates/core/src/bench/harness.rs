use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::functions::{add_noise, gen_test_function, squared_error, TestFunction};
use crate::denoise::{denoise, DenoiseConfig, DenoiseResult, Method};
use crate::error::{Error, Result};
use crate::par::{try_map_indexed, Execution};
use crate::seed::derive_seed;
use crate::stats::{mean, sample_sd};
use crate::wavelet::TransformKind;

/// Seed path component for the de-noising chains of a dataset. Every
/// estimator on the same dataset shares it, so a mean and a median entry
/// with otherwise identical settings come from the same chains.
const CHAIN_STREAM: u64 = 0xC4A1;

/// Something that turns a noisy dataset into an estimate.
#[derive(Clone, Debug, PartialEq)]
pub enum Estimator {
    Denoise(DenoiseConfig),
    /// Returns the noiseless signal; every error is zero.
    Truth,
    /// Returns the noisy data unchanged.
    Noisy,
}

impl Estimator {
    pub fn method_label(&self) -> String {
        match self {
            Estimator::Denoise(c) => c.method.as_str().to_string(),
            Estimator::Truth => "truth".into(),
            Estimator::Noisy => "noisy".into(),
        }
    }

    pub fn transform_label(&self) -> String {
        match self {
            Estimator::Denoise(c) => c.transform.as_str().to_string(),
            _ => "none".into(),
        }
    }

    pub fn filter_label(&self) -> String {
        match self {
            Estimator::Denoise(c) => c.filter.as_str().to_string(),
            _ => "none".into(),
        }
    }

    pub fn levels(&self) -> usize {
        match self {
            Estimator::Denoise(c) => c.levels,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub functions: Vec<TestFunction>,
    pub n: usize,
    pub snr_values: Vec<f64>,
    pub replicates: usize,
    pub estimators: Vec<Estimator>,
    pub seed: u64,
    /// Chain length per test function, replacing the configured one (burn-in
    /// becomes a third of it).
    pub iteration_overrides: Vec<(TestFunction, usize)>,
    pub execution: Execution,
}

impl BenchSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.replicates == 0 {
            return bad("replicates must be at least 1".into());
        }
        if self.n < 2 {
            return bad(format!("sample size must be at least 2, got {}", self.n));
        }
        if self.functions.is_empty() {
            return bad("no test functions given".into());
        }
        if self.estimators.is_empty() {
            return bad("no methods given".into());
        }
        if self.snr_values.is_empty() {
            return bad("no signal-to-noise ratios given".into());
        }
        if let Some(&s) = self
            .snr_values
            .iter()
            .find(|s| !(s.is_finite() && **s > 0.0))
        {
            return Err(Error::InvalidSnr(s));
        }
        for e in &self.estimators {
            if let Estimator::Denoise(c) = e {
                c.validate()?;
            }
        }
        Ok(())
    }

    fn config_for(&self, f: TestFunction, cfg: &DenoiseConfig, chain_seed: u64) -> DenoiseConfig {
        let mut cfg = cfg.clone();
        if let Some(&(_, it)) = self.iteration_overrides.iter().find(|(g, _)| *g == f) {
            cfg.chain.iterations = it;
            cfg.chain.burn_in = it / 3;
        }
        cfg.chain.seed = chain_seed;
        cfg
    }
}

/// Squared error of one estimator on one simulated dataset.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReplicateRecord {
    pub function: String,
    pub snr: f64,
    pub transform: String,
    pub filter: String,
    pub levels: usize,
    pub method: String,
    pub replicate: usize,
    pub dataset_seed: u64,
    pub sigma: f64,
    pub sq_error: f64,
}

/// Aggregate over replicates for one (function, SNR, estimator) cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchCell {
    pub function: String,
    pub snr: f64,
    pub transform: String,
    pub filter: String,
    pub levels: usize,
    pub method: String,
    pub replicates: usize,
    pub mean_sq_error: f64,
    pub sd_sq_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub n: usize,
    pub cells: Vec<BenchCell>,
    pub records: Vec<ReplicateRecord>,
}

impl BenchResult {
    pub fn cell(
        &self,
        function: TestFunction,
        snr: f64,
        method: &str,
        transform: &str,
    ) -> Option<&BenchCell> {
        self.cells.iter().find(|c| {
            c.function == function.as_str()
                && c.snr == snr
                && c.method == method
                && c.transform == transform
        })
    }

    pub fn write_cells_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        for c in &self.cells {
            w.serialize(c)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_records_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        for r in &self.records {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Seed of the noise realisation for one replicate of one cell. Depends on
/// the function and SNR values, not on their position in the spec.
pub fn dataset_seed(master: u64, function: TestFunction, snr: f64, replicate: usize) -> u64 {
    derive_seed(master, &[function.code(), snr.to_bits(), replicate as u64])
}

/// Caravan runs that differ only in the point summary share one set of chains.
fn same_chains(a: &DenoiseConfig, b: &DenoiseConfig) -> bool {
    a.method.is_caravan()
        && b.method.is_caravan()
        && DenoiseConfig {
            method: Method::CaravanMean,
            ..a.clone()
        } == DenoiseConfig {
            method: Method::CaravanMean,
            ..b.clone()
        }
}

fn run_dataset(
    spec: &BenchSpec,
    function: TestFunction,
    truth: &[f64],
    snr: f64,
    replicate: usize,
) -> Result<Vec<ReplicateRecord>> {
    let seed = dataset_seed(spec.seed, function, snr, replicate);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (noisy, sigma) = add_noise(truth, snr, &mut rng)?;
    let chain_seed = derive_seed(seed, &[CHAIN_STREAM]);

    let mut done: Vec<(DenoiseConfig, DenoiseResult)> = Vec::new();
    let mut records = Vec::with_capacity(spec.estimators.len());
    for est in &spec.estimators {
        let err = match est {
            Estimator::Truth => 0.0,
            Estimator::Noisy => squared_error(&noisy, truth)?,
            Estimator::Denoise(cfg) => {
                let cfg = spec.config_for(function, cfg, chain_seed);
                let reused = done
                    .iter()
                    .find(|(c, _)| same_chains(c, &cfg))
                    .and_then(|(c, r)| {
                        if c.method == cfg.method {
                            Some(r.estimate.clone())
                        } else {
                            r.companion.clone()
                        }
                    });
                let estimate = match reused {
                    Some(e) => e,
                    None => {
                        let r = denoise(&noisy, &cfg)?;
                        let e = r.estimate.clone();
                        if cfg.method.is_caravan() {
                            done.push((cfg, r));
                        }
                        e
                    }
                };
                squared_error(&estimate, truth)?
            }
        };
        records.push(ReplicateRecord {
            function: function.as_str().into(),
            snr,
            transform: est.transform_label(),
            filter: est.filter_label(),
            levels: est.levels(),
            method: est.method_label(),
            replicate,
            dataset_seed: seed,
            sigma,
            sq_error: err,
        });
    }
    Ok(records)
}

/// Runs every estimator on `replicates` noisy copies of every (function, SNR)
/// pair. All estimators of a replicate see the same noisy data. Datasets are
/// processed according to `spec.execution`; the result does not depend on it.
pub fn run_benchmark(spec: &BenchSpec) -> Result<BenchResult> {
    spec.validate()?;
    let truths = spec
        .functions
        .iter()
        .map(|&f| gen_test_function(f, spec.n))
        .collect::<Result<Vec<_>>>()?;

    let (nf, ns, nr) = (spec.functions.len(), spec.snr_values.len(), spec.replicates);
    let per_dataset = try_map_indexed(spec.execution, nf * ns * nr, |k| {
        let (fi, rest) = (k / (ns * nr), k % (ns * nr));
        let (si, rep) = (rest / nr, rest % nr);
        run_dataset(
            spec,
            spec.functions[fi],
            &truths[fi],
            spec.snr_values[si],
            rep,
        )
    })?;

    let ne = spec.estimators.len();
    let mut cells = Vec::with_capacity(nf * ns * ne);
    for fi in 0..nf {
        for si in 0..ns {
            let block = &per_dataset[(fi * ns + si) * nr..(fi * ns + si + 1) * nr];
            for ei in 0..ne {
                let errs: Vec<f64> = block.iter().map(|recs| recs[ei].sq_error).collect();
                let r = &block[0][ei];
                cells.push(BenchCell {
                    function: r.function.clone(),
                    snr: r.snr,
                    transform: r.transform.clone(),
                    filter: r.filter.clone(),
                    levels: r.levels,
                    method: r.method.clone(),
                    replicates: nr,
                    mean_sq_error: mean(&errs),
                    sd_sq_error: sample_sd(&errs),
                });
            }
        }
    }
    Ok(BenchResult {
        n: spec.n,
        cells,
        records: per_dataset.into_iter().flatten().collect(),
    })
}

fn caravan(
    transform: TransformKind,
    levels: usize,
    method: Method,
    iterations: usize,
) -> Estimator {
    let mut cfg = DenoiseConfig::new(transform);
    cfg.levels = levels;
    cfg.method = method;
    cfg.chain = crate::sampler::ChainConfig::with_iterations(iterations);
    Estimator::Denoise(cfg)
}

/// Names accepted by [`preset`].
pub const PRESETS: [&str; 6] = [
    "table1",
    "table1-fast",
    "table2",
    "table3",
    "table4",
    "baseline",
];

pub const DEFAULT_SEED: u64 = 1;

/// Ready-made specs for the standard synthetic studies.
///
/// * `table1`: DWT, LA8, six levels, N = 512, SNR 7 and 3, 20 replicates,
///   30 000 sweeps (100 000 for Blocks and both HeaviSine variants).
/// * `table1-fast`: as `table1` with 10 replicates and 10 000 sweeps throughout.
/// * `table2`: as `table1` with a four-level MODWT and per-level MAD.
/// * `table3` / `table4`: N = 256 with a four-level DWT / three-level MODWT,
///   100 000 sweeps for HeaviSine only.
/// * `baseline`: Bumps at SNR 7, caravan mean against hard thresholding.
pub fn preset(name: &str) -> Option<BenchSpec> {
    use TestFunction::*;
    let long = |fs: &[TestFunction]| fs.iter().map(|&f| (f, 100_000)).collect::<Vec<_>>();
    let both = |t, l, it| {
        vec![
            caravan(t, l, Method::CaravanMean, it),
            caravan(t, l, Method::CaravanMedian, it),
        ]
    };
    let base = |n, estimators, overrides| BenchSpec {
        functions: TestFunction::ALL.to_vec(),
        n,
        snr_values: vec![7.0, 3.0],
        replicates: 20,
        estimators,
        seed: DEFAULT_SEED,
        iteration_overrides: overrides,
        execution: Execution::default(),
    };
    let spec = match name {
        "table1" => base(
            512,
            both(TransformKind::Dwt, 6, 30_000),
            long(&[Blocks, HeaviSine, HeaviSineCanonical]),
        ),
        "table1-fast" => BenchSpec {
            replicates: 10,
            ..base(512, both(TransformKind::Dwt, 6, 10_000), Vec::new())
        },
        "table2" => base(
            512,
            both(TransformKind::Modwt, 4, 30_000),
            long(&[Blocks, HeaviSine, HeaviSineCanonical]),
        ),
        "table3" => base(
            256,
            both(TransformKind::Dwt, 4, 30_000),
            long(&[HeaviSine, HeaviSineCanonical]),
        ),
        "table4" => base(
            256,
            both(TransformKind::Modwt, 3, 30_000),
            long(&[HeaviSine, HeaviSineCanonical]),
        ),
        "baseline" => {
            let mut hard = DenoiseConfig::new(TransformKind::Dwt);
            hard.method = Method::HardThreshold;
            BenchSpec {
                functions: vec![Bumps],
                snr_values: vec![7.0],
                ..base(
                    512,
                    vec![
                        caravan(TransformKind::Dwt, 6, Method::CaravanMean, 30_000),
                        Estimator::Denoise(hard),
                    ],
                    Vec::new(),
                )
            }
        }
        _ => return None,
    };
    Some(spec)
}
