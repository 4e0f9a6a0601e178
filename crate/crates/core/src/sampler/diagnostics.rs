//! Trace, autocorrelation and running-mean series for convergence checks.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::Result;

/// Retained draws of one tracked parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterTrace {
    pub name: String,
    /// Sweep number (1-based) of every retained draw.
    pub iterations: Vec<usize>,
    pub values: Vec<f64>,
}

impl ParameterTrace {
    pub fn new(name: impl Into<String>, capacity: usize) -> Self {
        ParameterTrace {
            name: name.into(),
            iterations: Vec::with_capacity(capacity),
            values: Vec::with_capacity(capacity),
        }
    }

    pub fn push(&mut self, iteration: usize, value: f64) {
        self.iterations.push(iteration);
        self.values.push(value);
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagnostics {
    pub traces: Vec<ParameterTrace>,
    /// `autocorrelations[k][lag]` for `traces[k]`.
    pub autocorrelations: Vec<Vec<f64>>,
    pub running_means: Vec<Vec<f64>>,
}

impl Diagnostics {
    /// Derives autocorrelations (up to `max_lag`) and running means from traces.
    pub fn from_traces(traces: Vec<ParameterTrace>, max_lag: usize) -> Self {
        let autocorrelations = traces
            .iter()
            .map(|t| autocorrelation(&t.values, max_lag))
            .collect();
        let running_means = traces.iter().map(|t| running_mean(&t.values)).collect();
        Diagnostics {
            traces,
            autocorrelations,
            running_means,
        }
    }

    pub fn trace(&self, name: &str) -> Option<&ParameterTrace> {
        self.traces.iter().find(|t| t.name == name)
    }
}

/// Sample autocorrelation `r_k = sum_t (x_t - m)(x_{t+k} - m) / sum_t (x_t - m)^2`
/// for lags `0..=min(max_lag, len - 1)`. A constant series has `r_0 = 1` and
/// zero at every other lag.
pub fn autocorrelation(xs: &[f64], max_lag: usize) -> Vec<f64> {
    if xs.is_empty() {
        return Vec::new();
    }
    let n = xs.len();
    let mean = xs.iter().sum::<f64>() / n as f64;
    let centred: Vec<f64> = xs.iter().map(|x| x - mean).collect();
    let denom: f64 = centred.iter().map(|c| c * c).sum();
    let max_lag = max_lag.min(n - 1);
    let mut out = Vec::with_capacity(max_lag + 1);
    out.push(1.0);
    for lag in 1..=max_lag {
        if denom == 0.0 {
            out.push(0.0);
            continue;
        }
        let num: f64 = centred
            .iter()
            .zip(&centred[lag..])
            .map(|(a, b)| a * b)
            .sum();
        out.push(num / denom);
    }
    out
}

pub fn running_mean(xs: &[f64]) -> Vec<f64> {
    let mut sum = 0.0;
    xs.iter()
        .enumerate()
        .map(|(i, x)| {
            sum += x;
            sum / (i + 1) as f64
        })
        .collect()
}

#[derive(Serialize)]
struct TraceRow<'a> {
    iteration: usize,
    parameter: &'a str,
    value: f64,
}

#[derive(Serialize)]
struct AcfRow<'a> {
    lag: usize,
    parameter: &'a str,
    acf: f64,
}

#[derive(Serialize)]
struct RunningMeanRow<'a> {
    iteration: usize,
    parameter: &'a str,
    running_mean: f64,
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix
        .file_name()
        .map(|s| s.to_os_string())
        .unwrap_or_default();
    name.push(suffix);
    prefix.with_file_name(name)
}

/// Writes `<prefix>_trace.csv`, `<prefix>_acf.csv` and
/// `<prefix>_running_mean.csv`, returning the paths in that order.
pub fn export_diagnostics(diag: &Diagnostics, prefix: &Path) -> Result<[PathBuf; 3]> {
    let paths = [
        with_suffix(prefix, "_trace.csv"),
        with_suffix(prefix, "_acf.csv"),
        with_suffix(prefix, "_running_mean.csv"),
    ];

    let mut w = csv::Writer::from_path(&paths[0])?;
    for t in &diag.traces {
        for (it, v) in t.iterations.iter().zip(&t.values) {
            w.serialize(TraceRow {
                iteration: *it,
                parameter: &t.name,
                value: *v,
            })?;
        }
    }
    w.flush()?;

    let mut w = csv::Writer::from_path(&paths[1])?;
    for (t, acf) in diag.traces.iter().zip(&diag.autocorrelations) {
        for (lag, r) in acf.iter().enumerate() {
            w.serialize(AcfRow {
                lag,
                parameter: &t.name,
                acf: *r,
            })?;
        }
    }
    w.flush()?;

    let mut w = csv::Writer::from_path(&paths[2])?;
    for (t, rm) in diag.traces.iter().zip(&diag.running_means) {
        for (it, m) in t.iterations.iter().zip(rm) {
            w.serialize(RunningMeanRow {
                iteration: *it,
                parameter: &t.name,
                running_mean: *m,
            })?;
        }
    }
    w.flush()?;

    Ok(paths)
}
