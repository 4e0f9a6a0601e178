//! Benchmark descriptions in TOML.
//!
//! ```toml
//! functions = ["bumps", "doppler"]
//! snr = [7, 3]
//! methods = ["caravan-mean", "caravan-median", "hard"]
//! n = 512              # default 512
//! replicates = 20      # default 20
//! seed = 1             # default 1
//! transform = "dwt"    # default dwt
//! filter = "la8"       # default la8
//! levels = 6           # default 6 (dwt) or 4 (modwt)
//! iterations = 30000   # default 30000
//! burn_in = 10000      # default iterations / 3
//! sigma_mode = "mad-level1"
//! aligned = false
//!
//! [iterations_by_function]
//! blocks = 100000
//! ```

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use caravan::bench::{BenchSpec, Estimator, TestFunction, DEFAULT_SEED};
use caravan::denoise::{DenoiseConfig, Method, SigmaMode};
use caravan::sampler::ChainConfig;
use caravan::wavelet::{FilterName, TransformKind};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    functions: Vec<String>,
    snr: Vec<f64>,
    methods: Vec<String>,
    n: Option<usize>,
    replicates: Option<usize>,
    seed: Option<u64>,
    transform: Option<String>,
    filter: Option<String>,
    levels: Option<usize>,
    iterations: Option<usize>,
    burn_in: Option<usize>,
    sigma_mode: Option<String>,
    #[serde(default)]
    aligned: bool,
    #[serde(default)]
    iterations_by_function: BTreeMap<String, usize>,
}

fn parse_key<T>(key: &str, value: &str) -> Result<T>
where
    T: FromStr,
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e| anyhow!("key `{key}`: {e}"))
}

pub fn parse_bench_spec(text: &str) -> Result<BenchSpec> {
    let raw: SpecFile = toml::from_str(text).context("malformed benchmark spec")?;

    let transform = match &raw.transform {
        Some(t) => parse_key::<TransformKind>("transform", t)?,
        None => TransformKind::Dwt,
    };
    let mut cfg = DenoiseConfig::new(transform);
    if let Some(f) = &raw.filter {
        cfg.filter = parse_key::<FilterName>("filter", f)?;
    }
    if let Some(l) = raw.levels {
        cfg.levels = l;
    }
    if let Some(s) = &raw.sigma_mode {
        cfg.sigma_mode = parse_key::<SigmaMode>("sigma_mode", s)?;
    }
    cfg.align = raw.aligned;
    let iterations = raw.iterations.unwrap_or(cfg.chain.iterations);
    cfg.chain = ChainConfig::with_iterations(iterations);
    if let Some(b) = raw.burn_in {
        cfg.chain.burn_in = b;
    }

    let estimators = raw
        .methods
        .iter()
        .map(|m| {
            let method = parse_key::<Method>("methods", m)?;
            Ok(Estimator::Denoise(DenoiseConfig {
                method,
                ..cfg.clone()
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let functions = raw
        .functions
        .iter()
        .map(|f| parse_key::<TestFunction>("functions", f))
        .collect::<Result<Vec<_>>>()?;
    let iteration_overrides = raw
        .iterations_by_function
        .iter()
        .map(|(f, &it)| Ok((parse_key::<TestFunction>("iterations_by_function", f)?, it)))
        .collect::<Result<Vec<_>>>()?;
    if iteration_overrides.iter().any(|&(_, it)| it == 0) {
        bail!("key `iterations_by_function`: iteration counts must be positive");
    }

    let spec = BenchSpec {
        functions,
        n: raw.n.unwrap_or(512),
        snr_values: raw.snr,
        replicates: raw.replicates.unwrap_or(20),
        estimators,
        seed: raw.seed.unwrap_or(DEFAULT_SEED),
        iteration_overrides,
        execution: Default::default(),
    };
    spec.validate().context("invalid benchmark spec")?;
    Ok(spec)
}
