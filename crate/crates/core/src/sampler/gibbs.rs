use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::conditionals::{update_beta, update_lambda, update_tau, update_theta};
use super::diagnostics::{Diagnostics, ParameterTrace};
use super::model::{init_state, CaravanHyper, ChainConfig};
use super::mwg::{mwg_update_a, mwg_update_tau_gl};
use crate::error::{Error, Result};
use crate::stats::median_in_place;

/// Point estimates of the coefficients over the retained draws.
#[derive(Clone, Debug, PartialEq)]
pub struct PosteriorSummary {
    pub mean: Vec<f64>,
    /// Per-coordinate median, interpolating between the two middle order
    /// statistics when the sample count is even. Retained draws are held in
    /// single precision for this, so long chains on wide levels stay within
    /// memory; the mean is accumulated in double precision.
    pub median: Vec<f64>,
    pub acceptance_rate_a: f64,
    pub acceptance_rate_tau_gl: f64,
    pub retained_samples: usize,
}

/// Runs one Gibbs chain on a level of empirical coefficients `y` with plug-in
/// noise level `sigma_hat`.
///
/// Each sweep updates, in order, the coefficients, the variance chain
/// `theta`, the latent `lambda`, the local shrinkage `tau`, then the global
/// shrinkage and the smoothing parameter by log-scale random-walk Metropolis.
/// The result depends only on the arguments (the chain RNG is seeded from
/// `config.seed`).
pub fn gibbs_run(
    y: &[f64],
    sigma_hat: f64,
    hyper: &CaravanHyper,
    config: &ChainConfig,
) -> Result<(PosteriorSummary, Diagnostics)> {
    config.validate()?;
    hyper.validate()?;
    if !(sigma_hat.is_finite() && sigma_hat > 0.0) {
        return Err(Error::InvalidSigma(sigma_hat));
    }
    let mut state = init_state(y)?;
    let n = y.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let retained = config.retained_samples();
    let mut draws: Vec<f32> = Vec::with_capacity(retained * n);
    let mut sums = vec![0.0; n];
    let tracked: Vec<usize> = config
        .tracked_betas
        .iter()
        .copied()
        .filter(|&i| i < n)
        .collect();
    let mut traces: Vec<ParameterTrace> = ["a", "tau_gl"]
        .into_iter()
        .map(String::from)
        .chain(tracked.iter().map(|i| format!("beta[{}]", i + 1)))
        .map(|name| ParameterTrace::new(name, retained))
        .collect();

    let (mut acc_a, mut acc_gl) = (0usize, 0usize);
    for it in 1..=config.iterations {
        update_beta(&mut state, y, sigma_hat, &mut rng)?;
        update_theta(&mut state, &mut rng);
        update_lambda(&mut state, hyper, &mut rng);
        update_tau(&mut state, &mut rng);
        acc_gl += mwg_update_tau_gl(&mut state, hyper, &mut rng) as usize;
        acc_a += mwg_update_a(&mut state, hyper, &mut rng) as usize;

        if it > config.burn_in && (it - config.burn_in).is_multiple_of(config.thinning) {
            draws.extend(state.beta.iter().map(|&b| b as f32));
            for (s, b) in sums.iter_mut().zip(&state.beta) {
                *s += b;
            }
            traces[0].push(it, state.a);
            traces[1].push(it, state.tau_gl);
            for (trace, &i) in traces[2..].iter_mut().zip(&tracked) {
                trace.push(it, state.beta[i]);
            }
        }
    }
    debug_assert_eq!(draws.len(), retained * n);

    let mean = sums.iter().map(|s| s / retained as f64).collect();

    let mut column = vec![0.0; retained];
    let median = (0..n)
        .map(|i| {
            for (c, row) in column.iter_mut().zip(draws.chunks_exact(n)) {
                *c = f64::from(row[i]);
            }
            median_in_place(&mut column)
        })
        .collect();

    let iters = config.iterations as f64;
    let summary = PosteriorSummary {
        mean,
        median,
        acceptance_rate_a: acc_a as f64 / iters,
        acceptance_rate_tau_gl: acc_gl as f64 / iters,
        retained_samples: retained,
    };
    Ok((summary, Diagnostics::from_traces(traces, config.max_lag)))
}
