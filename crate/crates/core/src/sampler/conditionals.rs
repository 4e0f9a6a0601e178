//! Conjugate full-conditional updates.

use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use super::model::{CaravanHyper, CaravanState};
use crate::error::{Error, Result};

pub(crate) const FLOOR: f64 = 1e-300;
const CEIL: f64 = 1e300;

/// Draws from the inverse-gamma distribution with the given shape and scale
/// by inverting a `Gamma(shape, 1)` draw.
pub fn sample_inv_gamma<R: Rng + ?Sized>(rng: &mut R, shape: f64, scale: f64) -> f64 {
    let g: f64 = Gamma::new(shape, 1.0)
        .expect("inverse-gamma shape must be positive and finite")
        .sample(rng);
    (scale.max(FLOOR) / g).clamp(FLOOR, CEIL)
}

/// Mean and variance of the normal full conditional of one coefficient.
///
/// Prior variance `theta * tau`, likelihood variance `sigma^2`.
pub fn beta_conditional(theta_tau: f64, y: f64, sigma2: f64) -> (f64, f64) {
    let var = 1.0 / (1.0 / theta_tau.max(FLOOR) + 1.0 / sigma2);
    (var * y / sigma2, var)
}

pub fn update_beta<R: Rng + ?Sized>(
    state: &mut CaravanState,
    y: &[f64],
    sigma_hat: f64,
    rng: &mut R,
) -> Result<()> {
    if !(sigma_hat.is_finite() && sigma_hat > 0.0) {
        return Err(Error::InvalidSigma(sigma_hat));
    }
    if y.len() != state.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: state.len(),
        });
    }
    let sigma2 = sigma_hat * sigma_hat;
    for i in 0..y.len() {
        let (mean, var) = beta_conditional(state.theta[i] * state.tau[i], y[i], sigma2);
        let z: f64 = rng.sample(StandardNormal);
        state.beta[i] = mean + var.sqrt() * z;
    }
    Ok(())
}

/// Shape and scale of the inverse-gamma full conditional of `theta[i]`.
pub fn theta_conditional(state: &CaravanState, i: usize) -> (f64, f64) {
    let n = state.len();
    let a = state.a;
    let data = state.beta[i] * state.beta[i] / (2.0 * state.tau[i].max(FLOOR));
    if i + 1 < n {
        (
            2.0 * a + 0.5,
            a / state.lambda[i] + a / state.lambda[i + 1] + data,
        )
    } else {
        (a + 0.5, a / state.lambda[i] + data)
    }
}

pub fn update_theta<R: Rng + ?Sized>(state: &mut CaravanState, rng: &mut R) {
    for i in 0..state.len() {
        let (shape, scale) = theta_conditional(state, i);
        state.theta[i] = sample_inv_gamma(rng, shape, scale);
    }
}

/// Shape and scale of the inverse-gamma full conditional of `lambda[i]`.
pub fn lambda_conditional(state: &CaravanState, hyper: &CaravanHyper, i: usize) -> (f64, f64) {
    let a = state.a;
    if i == 0 {
        (hyper.a0 + a, hyper.b0 + a / state.theta[0])
    } else {
        (2.0 * a, a / state.theta[i - 1] + a / state.theta[i])
    }
}

/// Updates `lambda[0]` and the interior `lambda[1..n]`. A single-coefficient
/// level has no interior variables and only `lambda[0]` moves.
pub fn update_lambda<R: Rng + ?Sized>(state: &mut CaravanState, hyper: &CaravanHyper, rng: &mut R) {
    for i in 0..state.len() {
        let (shape, scale) = lambda_conditional(state, hyper, i);
        state.lambda[i] = sample_inv_gamma(rng, shape, scale);
    }
}

/// Shape and scale of the inverse-gamma full conditional of `tau[i]`.
pub fn tau_conditional(state: &CaravanState, i: usize) -> (f64, f64) {
    let g = state.tau_gl;
    (
        g + 0.5,
        g + state.beta[i] * state.beta[i] / (2.0 * state.theta[i].max(FLOOR)),
    )
}

pub fn update_tau<R: Rng + ?Sized>(state: &mut CaravanState, rng: &mut R) {
    for i in 0..state.len() {
        let (shape, scale) = tau_conditional(state, i);
        state.tau[i] = sample_inv_gamma(rng, shape, scale);
    }
}
