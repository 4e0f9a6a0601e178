//! Gibbs sampler for the inverse-gamma Markov chain shrinkage prior on one
//! level of wavelet coefficients.
//!
//! Model for a level with `n` coefficients:
//!
//! ```text
//! y_i | beta_i          ~ N(beta_i, sigma^2)            (sigma plugged in)
//! beta_i | theta, tau   ~ N(0, theta_i tau_i)
//! lambda_0              ~ IG(a0, b0)
//! theta_i | lambda_{i-1} ~ IG(a, a / lambda_{i-1})       i = 1..n
//! lambda_i | theta_i    ~ IG(a, a / theta_i)             i = 1..n-1
//! tau_i | tau_gl        ~ IG(tau_gl, tau_gl)
//! tau_gl ~ Gamma(a_gl, b_gl),  a ~ Gamma(a_a, b_a)
//! ```

mod conditionals;
mod diagnostics;
mod gibbs;
mod model;
mod mwg;

pub use conditionals::{
    beta_conditional, lambda_conditional, sample_inv_gamma, tau_conditional, theta_conditional,
    update_beta, update_lambda, update_tau, update_theta,
};
pub use diagnostics::{
    autocorrelation, export_diagnostics, running_mean, Diagnostics, ParameterTrace,
};
pub use gibbs::{gibbs_run, PosteriorSummary};
pub use model::{init_state, CaravanHyper, CaravanState, ChainConfig};
pub use mwg::{
    a_statistic, log_target_a, log_target_tau_gl, log_walk_step, mwg_update_a, mwg_update_tau_gl,
    step_size, tau_statistic,
};
