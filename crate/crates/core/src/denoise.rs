//! End-to-end de-noising: noise-level estimation, per-level shrinkage of the
//! wavelet coefficients, scaling-coefficient passthrough and reconstruction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::par::{try_map_indexed, Execution};
use crate::sampler::{gibbs_run, CaravanHyper, ChainConfig, Diagnostics, PosteriorSummary};
use crate::seed::derive_seed;
use crate::stats::median_in_place;
use crate::wavelet::{
    align, check_dwt_length, dwt_forward, inverse, modwt_forward, FilterName, QmfFilter,
    TransformKind,
};

/// `Phi^{-1}(3/4)`, making the MAD consistent for the Gaussian standard
/// deviation.
pub const MAD_NORMAL_CONSTANT: f64 = 0.674_489_750_196_081_7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    CaravanMean,
    CaravanMedian,
    HardThreshold,
    SoftThreshold,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::CaravanMean,
        Method::CaravanMedian,
        Method::HardThreshold,
        Method::SoftThreshold,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::CaravanMean => "caravan-mean",
            Method::CaravanMedian => "caravan-median",
            Method::HardThreshold => "hard",
            Method::SoftThreshold => "soft",
        }
    }

    pub fn is_caravan(&self) -> bool {
        matches!(self, Method::CaravanMean | Method::CaravanMedian)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "caravan-mean" | "caravan_mean" => Ok(Method::CaravanMean),
            "caravan-median" | "caravan_median" => Ok(Method::CaravanMedian),
            "hard" | "hard-threshold" => Ok(Method::HardThreshold),
            "soft" | "soft-threshold" => Ok(Method::SoftThreshold),
            _ => Err(Error::UnknownMethod(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThresholdMode {
    Hard,
    Soft,
}

/// How the per-level noise levels are estimated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigmaMode {
    /// One MAD estimate from the level-1 coefficients, shared by all levels.
    /// DWT only: MODWT levels have level-dependent noise variance.
    MadLevel1,
    /// A separate MAD estimate for every level.
    MadEachLevel,
    /// MODWT only: `sigma_j^2 = 2^(1-j) sigma_1^2` from the level-1 MAD.
    MadLevel1Scaled,
}

impl SigmaMode {
    pub fn default_for(kind: TransformKind) -> Self {
        match kind {
            TransformKind::Dwt => SigmaMode::MadLevel1,
            TransformKind::Modwt => SigmaMode::MadEachLevel,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SigmaMode::MadLevel1 => "mad-level1",
            SigmaMode::MadEachLevel => "mad-each",
            SigmaMode::MadLevel1Scaled => "mad-scaled",
        }
    }
}

impl fmt::Display for SigmaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SigmaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mad-level1" => Ok(SigmaMode::MadLevel1),
            "mad-each" => Ok(SigmaMode::MadEachLevel),
            "mad-scaled" => Ok(SigmaMode::MadLevel1Scaled),
            other => Err(Error::InvalidConfig(format!(
                "unknown sigma mode `{other}` (expected mad-level1, mad-each or mad-scaled)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenoiseConfig {
    pub transform: TransformKind,
    pub filter: FilterName,
    pub levels: usize,
    pub method: Method,
    /// Chain settings for caravan methods. Each level runs its own chain seeded
    /// with `derive_seed(chain.seed, &[level])`, levels counted from 1.
    pub chain: ChainConfig,
    pub hyper: CaravanHyper,
    pub sigma_mode: SigmaMode,
    /// Shrink the zero-phase aligned coefficients. Only the caravan methods
    /// are affected, since their prior couples neighbouring coefficients.
    pub align: bool,
    pub execution: Execution,
}

impl DenoiseConfig {
    /// LA8 with six DWT levels or four MODWT levels, caravan posterior mean,
    /// 30 000 sweeps.
    pub fn new(transform: TransformKind) -> Self {
        DenoiseConfig {
            transform,
            filter: FilterName::La8,
            levels: match transform {
                TransformKind::Dwt => 6,
                TransformKind::Modwt => 4,
            },
            method: Method::CaravanMean,
            chain: ChainConfig::default(),
            hyper: CaravanHyper::default(),
            sigma_mode: SigmaMode::default_for(transform),
            align: false,
            execution: Execution::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels == 0 {
            return Err(Error::InvalidLevels(0));
        }
        match (self.transform, self.sigma_mode) {
            (TransformKind::Dwt, SigmaMode::MadLevel1Scaled) => {
                return Err(Error::InvalidConfig(
                    "sigma mode mad-scaled applies to the MODWT only".into(),
                ))
            }
            (TransformKind::Modwt, SigmaMode::MadLevel1) => {
                return Err(Error::InvalidConfig(
                    "sigma mode mad-level1 applies to the DWT only; use mad-each or mad-scaled"
                        .into(),
                ))
            }
            _ => {}
        }
        if self.method.is_caravan() {
            self.chain.validate()?;
            self.hyper.validate()?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenoiseResult {
    pub estimate: Vec<f64>,
    /// For caravan methods, the reconstruction from the other point summary
    /// of the same chains (the median when `estimate` uses the mean, and the
    /// other way round).
    pub companion: Option<Vec<f64>>,
    /// Noise level used at each wavelet level, finest first.
    pub sigma_estimates: Vec<f64>,
    /// Per-level posterior summaries, finest first; empty for thresholding.
    pub summaries: Vec<PosteriorSummary>,
    /// Per-level chain diagnostics, finest first; empty for thresholding.
    pub diagnostics: Vec<Diagnostics>,
}

/// `median(|c - median(c)|) / Phi^{-1}(3/4)`.
pub fn estimate_sigma_mad(coeffs: &[f64]) -> Result<f64> {
    if coeffs.is_empty() {
        return Err(Error::EmptySignal);
    }
    if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let mut buf = coeffs.to_vec();
    let centre = median_in_place(&mut buf);
    for (b, c) in buf.iter_mut().zip(coeffs) {
        *b = (c - centre).abs();
    }
    let mad = median_in_place(&mut buf);
    if mad <= 0.0 {
        return Err(Error::DegenerateMad);
    }
    Ok(mad / MAD_NORMAL_CONSTANT)
}

/// Universal threshold `sigma * sqrt(2 ln n)`.
pub fn threshold_value(sigma: f64, n: usize) -> f64 {
    sigma * (2.0 * (n.max(1) as f64).ln()).sqrt()
}

pub fn apply_threshold(coeffs: &[f64], threshold: f64, mode: ThresholdMode) -> Vec<f64> {
    coeffs
        .iter()
        .map(|&c| match mode {
            ThresholdMode::Hard => {
                if c.abs() > threshold {
                    c
                } else {
                    0.0
                }
            }
            ThresholdMode::Soft => c.signum() * (c.abs() - threshold).max(0.0),
        })
        .collect()
}

/// Thresholds `coeffs` at `sigma * sqrt(2 ln n)` with `n = coeffs.len()`.
pub fn universal_threshold(coeffs: &[f64], sigma: f64, mode: ThresholdMode) -> Vec<f64> {
    apply_threshold(coeffs, threshold_value(sigma, coeffs.len()), mode)
}

/// Height of the highest peak, i.e. the maximum of the sequence
/// (negative infinity for an empty one).
pub fn peak_height(estimate: &[f64]) -> f64 {
    estimate.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

fn level_sigmas(wavelet: &[Vec<f64>], mode: SigmaMode) -> Result<Vec<f64>> {
    match mode {
        SigmaMode::MadLevel1 => {
            let s = estimate_sigma_mad(&wavelet[0])?;
            Ok(vec![s; wavelet.len()])
        }
        SigmaMode::MadEachLevel => wavelet.iter().map(|w| estimate_sigma_mad(w)).collect(),
        SigmaMode::MadLevel1Scaled => {
            let s1 = estimate_sigma_mad(&wavelet[0])?;
            Ok((1..=wavelet.len())
                .map(|j| s1 * 2f64.powf((1.0 - j as f64) / 2.0))
                .collect())
        }
    }
}

/// De-noises `x`: forward transform, noise estimation, independent
/// processing of every wavelet level, inverse transform. Scaling
/// coefficients are passed through unchanged.
///
/// Results do not depend on `config.execution`, since every level's chain is
/// seeded from the master seed and its level index alone.
pub fn denoise(x: &[f64], config: &DenoiseConfig) -> Result<DenoiseResult> {
    config.validate()?;
    if x.is_empty() {
        return Err(Error::EmptySignal);
    }
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let filter = QmfFilter::new(config.filter);
    let mut d = match config.transform {
        TransformKind::Dwt => {
            check_dwt_length(x.len(), config.levels)?;
            dwt_forward(x, &filter, config.levels)?
        }
        TransformKind::Modwt => modwt_forward(x, &filter, config.levels)?,
    };
    let sigmas = level_sigmas(&d.wavelet, config.sigma_mode)?;
    if config.align && config.method.is_caravan() {
        d = align(&d)?;
    }

    let n_total = x.len();
    type Level = (Vec<f64>, Option<(Vec<f64>, PosteriorSummary, Diagnostics)>);
    let processed = try_map_indexed(config.execution, d.levels, |j| -> Result<Level> {
        let y = &d.wavelet[j];
        let sigma = sigmas[j];
        match config.method {
            Method::HardThreshold | Method::SoftThreshold => {
                let mode = if config.method == Method::HardThreshold {
                    ThresholdMode::Hard
                } else {
                    ThresholdMode::Soft
                };
                let t = threshold_value(sigma, n_total);
                Ok((apply_threshold(y, t, mode), None))
            }
            Method::CaravanMean | Method::CaravanMedian => {
                let mut chain = config.chain.clone();
                chain.seed = derive_seed(config.chain.seed, &[j as u64 + 1]);
                let (summary, diag) = gibbs_run(y, sigma, &config.hyper, &chain)?;
                let (est, other) = if config.method == Method::CaravanMean {
                    (summary.mean.clone(), summary.median.clone())
                } else {
                    (summary.median.clone(), summary.mean.clone())
                };
                Ok((est, Some((other, summary, diag))))
            }
        }
    })?;

    let mut summaries = Vec::new();
    let mut diagnostics = Vec::new();
    let mut other = d.clone();
    for ((level, alt), (coeffs, chain)) in
        d.wavelet.iter_mut().zip(&mut other.wavelet).zip(processed)
    {
        *level = coeffs;
        if let Some((o, s, g)) = chain {
            *alt = o;
            summaries.push(s);
            diagnostics.push(g);
        }
    }
    let estimate = inverse(&d)?;
    let companion = if config.method.is_caravan() {
        Some(inverse(&other)?)
    } else {
        None
    };
    Ok(DenoiseResult {
        estimate,
        companion,
        sigma_estimates: sigmas,
        summaries,
        diagnostics,
    })
}
