//! Metropolis-within-Gibbs updates for the global shrinkage parameter and the
//! chain smoothing parameter, both as Gaussian random walks on the log scale.

use rand::Rng;
use rand_distr::StandardNormal;
use statrs::function::gamma::ln_gamma;

use super::conditionals::FLOOR;
use super::model::{CaravanHyper, CaravanState};

/// Random-walk step size `c / log2 n`; levels with fewer than two
/// coefficients use `c`.
pub fn step_size(c: f64, n: usize) -> f64 {
    c / (n as f64).log2().max(1.0)
}

/// `sum_i (log tau_i + 1 / tau_i)`, the data statistic of the global
/// shrinkage conditional.
pub fn tau_statistic(tau: &[f64]) -> f64 {
    tau.iter().map(|t| t.ln() + 1.0 / t).sum()
}

/// Log of the full conditional density of `tau_gl` up to a constant.
pub fn log_target_tau_gl(tau_gl: f64, n: usize, stat: f64, hyper: &CaravanHyper) -> f64 {
    let n = n as f64;
    -n * ln_gamma(tau_gl) + (n * tau_gl + hyper.a_gl - 1.0) * tau_gl.ln()
        - tau_gl * (hyper.b_gl + stat)
}

/// Data statistic of the `a` conditional, in one-based indexing:
///
/// ```text
/// sum_{i<n} [log(theta_i^2 lambda_{i-1} lambda_i) + 1/(lambda_{i-1} theta_i) + 1/(lambda_i theta_i)]
///     + log(lambda_{n-1} theta_n) + 1/(lambda_{n-1} theta_n)
/// ```
pub fn a_statistic(theta: &[f64], lambda: &[f64]) -> f64 {
    let n = theta.len();
    let mut s = 0.0;
    for i in 0..n {
        let left = lambda[i] * theta[i];
        s += left.ln() + 1.0 / left;
        if i + 1 < n {
            let right = lambda[i + 1] * theta[i];
            s += right.ln() + 1.0 / right;
        }
    }
    s
}

/// Log of the full conditional density of `a` up to a constant.
pub fn log_target_a(a: f64, n: usize, stat: f64, hyper: &CaravanHyper) -> f64 {
    let m = 2.0 * n as f64 - 1.0;
    (hyper.a_a - 1.0 + m * a) * a.ln() - m * ln_gamma(a) - a * (hyper.b_a + stat)
}

/// One Metropolis step on `log x` with proposal `log x + step * z`, accepted
/// when `log u` is below the log ratio of the log-scale targets
/// `log pi(x) + log x`. Non-finite proposals are rejected.
///
/// Returns the new value and whether the proposal was accepted.
pub fn log_walk_step(
    x: f64,
    step: f64,
    z: f64,
    u: f64,
    log_target: impl Fn(f64) -> f64,
) -> (f64, bool) {
    let lx = x.ln();
    let lp = lx + step * z;
    let proposal = lp.exp();
    if !(proposal.is_finite() && proposal > FLOOR) {
        return (x, false);
    }
    let new = log_target(proposal) + lp;
    if !new.is_finite() {
        return (x, false);
    }
    let log_ratio = new - (log_target(x) + lx);
    if u.ln() < log_ratio {
        (proposal, true)
    } else {
        (x, false)
    }
}

pub fn mwg_update_tau_gl<R: Rng + ?Sized>(
    state: &mut CaravanState,
    hyper: &CaravanHyper,
    rng: &mut R,
) -> bool {
    let n = state.len();
    let stat = tau_statistic(&state.tau);
    let z: f64 = rng.sample(StandardNormal);
    let u: f64 = rng.random();
    let (next, accepted) = log_walk_step(state.tau_gl, step_size(hyper.c_gl, n), z, u, |t| {
        log_target_tau_gl(t, n, stat, hyper)
    });
    state.tau_gl = next;
    accepted
}

pub fn mwg_update_a<R: Rng + ?Sized>(
    state: &mut CaravanState,
    hyper: &CaravanHyper,
    rng: &mut R,
) -> bool {
    let n = state.len();
    let stat = a_statistic(&state.theta, &state.lambda);
    let z: f64 = rng.sample(StandardNormal);
    let u: f64 = rng.random();
    let (next, accepted) = log_walk_step(state.a, step_size(hyper.c_a, n), z, u, |a| {
        log_target_a(a, n, stat, hyper)
    });
    state.a = next;
    accepted
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::model::init_state;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_move_is_accepted() {
        for u in [0.0, 0.3, 0.999_999] {
            let (x, acc) = log_walk_step(2.0, 0.7, 0.0, u, |t| -t * t);
            assert!(acc);
            assert_eq!(x, 2.0);
        }
    }

    #[test]
    fn non_finite_proposal_is_rejected() {
        let (x, acc) = log_walk_step(1.0, 1.0, 1.0, 0.0, |_| f64::NAN);
        assert!(!acc);
        assert_eq!(x, 1.0);
        let (x, acc) = log_walk_step(1.0, 1000.0, 1.0, 0.0, |t| -t);
        assert!(!acc && x == 1.0);
    }

    #[test]
    fn step_sizes() {
        assert_eq!(step_size(2.5, 16), 0.625);
        assert_eq!(step_size(1.5, 2), 1.5);
        assert_eq!(step_size(1.5, 1), 1.5);
    }

    #[test]
    fn statistics_with_unit_variables() {
        assert_eq!(tau_statistic(&[1.0; 7]), 7.0);
        // n terms on the left, n - 1 on the right, each contributing 1
        assert_eq!(a_statistic(&[1.0; 2], &[1.0; 2]), 3.0);
        assert_eq!(a_statistic(&[1.0; 5], &[1.0; 5]), 9.0);
    }

    #[test]
    fn a_statistic_matches_definition() {
        let theta: [f64; 3] = [0.5, 2.0, 1.5];
        let lambda: [f64; 3] = [3.0, 0.25, 4.0];
        let direct = (theta[0] * theta[0] * lambda[0] * lambda[1]).ln()
            + 1.0 / (lambda[0] * theta[0])
            + 1.0 / (lambda[1] * theta[0])
            + (theta[1] * theta[1] * lambda[1] * lambda[2]).ln()
            + 1.0 / (lambda[1] * theta[1])
            + 1.0 / (lambda[2] * theta[1])
            + (lambda[2] * theta[2]).ln()
            + 1.0 / (lambda[2] * theta[2]);
        assert!((a_statistic(&theta, &lambda) - direct).abs() < 1e-12);
    }

    #[test]
    fn updates_keep_state_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let hyper = CaravanHyper::default();
        let mut s = init_state(&[0.1, -2.0, 3.0]).unwrap();
        let mut accepted = 0;
        for _ in 0..2000 {
            accepted += mwg_update_tau_gl(&mut s, &hyper, &mut rng) as usize;
            accepted += mwg_update_a(&mut s, &hyper, &mut rng) as usize;
            assert!(s.is_valid());
        }
        assert!(accepted > 0);
    }
}
