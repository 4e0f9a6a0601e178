use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::stats::sample_sd;

/// Peak and jump locations shared by Bumps and Blocks.
pub const LOCATIONS: [f64; 11] = [
    0.1, 0.13, 0.15, 0.23, 0.25, 0.4, 0.44, 0.65, 0.76, 0.78, 0.81,
];
const BUMP_HEIGHTS: [f64; 11] = [4.0, 5.0, 3.0, 4.0, 5.0, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2];
const BUMP_WIDTHS: [f64; 11] = [
    0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005,
];
pub const BLOCK_HEIGHTS: [f64; 11] = [4.0, -5.0, 3.0, -4.0, 5.0, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2];

/// The four classical de-noising test signals.
///
/// HeaviSine comes in two variants: [`TestFunction::HeaviSine`] uses the
/// slow `4 sin(pi t)` carrier, [`TestFunction::HeaviSineCanonical`] the
/// usual `4 sin(4 pi t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestFunction {
    Bumps,
    Blocks,
    Doppler,
    HeaviSine,
    HeaviSineCanonical,
}

fn sgn(t: f64) -> f64 {
    if t > 0.0 {
        1.0
    } else if t < 0.0 {
        -1.0
    } else {
        0.0
    }
}

impl TestFunction {
    pub const ALL: [TestFunction; 5] = [
        TestFunction::Bumps,
        TestFunction::Blocks,
        TestFunction::Doppler,
        TestFunction::HeaviSine,
        TestFunction::HeaviSineCanonical,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TestFunction::Bumps => "bumps",
            TestFunction::Blocks => "blocks",
            TestFunction::Doppler => "doppler",
            TestFunction::HeaviSine => "heavisine",
            TestFunction::HeaviSineCanonical => "heavisine-canonical",
        }
    }

    /// Column label used in the rendered tables.
    pub fn short(&self) -> &'static str {
        match self {
            TestFunction::Bumps => "bmp",
            TestFunction::Blocks => "blk",
            TestFunction::Doppler => "dpl",
            TestFunction::HeaviSine => "hvs",
            TestFunction::HeaviSineCanonical => "hvs*",
        }
    }

    /// Stable identifier mixed into dataset seeds.
    pub(crate) fn code(&self) -> u64 {
        match self {
            TestFunction::Bumps => 1,
            TestFunction::Blocks => 2,
            TestFunction::Doppler => 3,
            TestFunction::HeaviSine => 4,
            TestFunction::HeaviSineCanonical => 5,
        }
    }

    /// The unscaled function at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            TestFunction::Bumps => {
                let k = |u: f64| (1.0 + u.abs()).powi(-4);
                LOCATIONS
                    .iter()
                    .zip(BUMP_HEIGHTS.iter().zip(&BUMP_WIDTHS))
                    .map(|(tj, (h, w))| h * k((t - tj) / w))
                    .sum::<f64>()
                    / 7.0
            }
            TestFunction::Blocks => LOCATIONS
                .iter()
                .zip(&BLOCK_HEIGHTS)
                .map(|(tj, h)| h * (1.0 + sgn(t - tj)) / 2.0)
                .sum(),
            TestFunction::Doppler => (t * (1.0 - t)).sqrt() * (2.0 * PI * 1.05 / (t + 0.05)).sin(),
            TestFunction::HeaviSine => 4.0 * (PI * t).sin() - sgn(t - 0.3) - sgn(0.72 - t),
            TestFunction::HeaviSineCanonical => {
                4.0 * (4.0 * PI * t).sin() - sgn(t - 0.3) - sgn(0.72 - t)
            }
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bumps" | "bmp" => Ok(TestFunction::Bumps),
            "blocks" | "blk" => Ok(TestFunction::Blocks),
            "doppler" | "dpl" => Ok(TestFunction::Doppler),
            "heavisine" | "hvs" => Ok(TestFunction::HeaviSine),
            "heavisine-canonical" | "hvs-canonical" => Ok(TestFunction::HeaviSineCanonical),
            _ => Err(Error::UnknownFunction(s.to_string())),
        }
    }
}

/// Grid `t_i = i / n` for `i = 1..=n`.
pub fn grid(n: usize) -> Vec<f64> {
    (1..=n).map(|i| i as f64 / n as f64).collect()
}

/// Samples `f` on the grid `t_i = i / n` and rescales it to unit sample
/// standard deviation.
pub fn gen_test_function(f: TestFunction, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidConfig(format!(
            "test functions need at least 2 samples, got {n}"
        )));
    }
    let raw: Vec<f64> = grid(n).into_iter().map(|t| f.eval(t)).collect();
    let sd = sample_sd(&raw);
    Ok(raw.into_iter().map(|v| v / sd).collect())
}

/// Adds i.i.d. `N(0, sigma^2)` noise with `sigma = SD(signal) / snr`.
/// Returns the noisy series and `sigma`.
pub fn add_noise<R: Rng + ?Sized>(
    signal: &[f64],
    snr: f64,
    rng: &mut R,
) -> Result<(Vec<f64>, f64)> {
    if !(snr.is_finite() && snr > 0.0) {
        return Err(Error::InvalidSnr(snr));
    }
    let sigma = sample_sd(signal) / snr;
    let noisy = signal
        .iter()
        .map(|v| {
            let z: f64 = rng.sample(StandardNormal);
            v + sigma * z
        })
        .collect();
    Ok((noisy, sigma))
}

/// `sum_i (estimate_i - truth_i)^2`.
pub fn squared_error(estimate: &[f64], truth: &[f64]) -> Result<f64> {
    if estimate.len() != truth.len() {
        return Err(Error::LengthMismatch {
            left: estimate.len(),
            right: truth.len(),
        });
    }
    Ok(estimate
        .iter()
        .zip(truth)
        .map(|(e, t)| (e - t) * (e - t))
        .sum())
}
