use crate::error::{Error, Result};

/// Hyperparameters of the shrinkage prior and the Metropolis step constants.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CaravanHyper {
    /// Shape of the inverse-gamma prior on `lambda_0`.
    pub a0: f64,
    /// Scale of the inverse-gamma prior on `lambda_0`.
    pub b0: f64,
    /// Gamma prior on the chain smoothing parameter `a` (shape, rate).
    pub a_a: f64,
    pub b_a: f64,
    /// Gamma prior on the global shrinkage parameter (shape, rate).
    pub a_gl: f64,
    pub b_gl: f64,
    /// Random-walk step constant for `log a`; the step is `c_a / log2 n`.
    pub c_a: f64,
    /// Random-walk step constant for `log tau_gl`; the step is `c_gl / log2 n`.
    pub c_gl: f64,
}

impl Default for CaravanHyper {
    fn default() -> Self {
        CaravanHyper {
            a0: 0.1,
            b0: 0.1,
            a_a: 0.1,
            b_a: 0.1,
            a_gl: 0.1,
            b_gl: 0.1,
            c_a: 1.5,
            c_gl: 2.5,
        }
    }
}

impl CaravanHyper {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("a0", self.a0),
            ("b0", self.b0),
            ("a_a", self.a_a),
            ("b_a", self.b_a),
            ("a_gl", self.a_gl),
            ("b_gl", self.b_gl),
            ("c_a", self.c_a),
            ("c_gl", self.c_gl),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidHyper { name, value });
            }
        }
        Ok(())
    }
}

/// Run parameters of one Gibbs chain.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainConfig {
    pub iterations: usize,
    pub burn_in: usize,
    pub thinning: usize,
    pub seed: u64,
    /// Zero-based coefficient indices whose draws are kept as diagnostics traces.
    pub tracked_betas: Vec<usize>,
    /// Largest lag of the reported autocorrelations.
    pub max_lag: usize,
}

impl Default for ChainConfig {
    fn default() -> Self {
        ChainConfig::with_iterations(30_000)
    }
}

impl ChainConfig {
    /// `iterations` sweeps with the first third discarded as burn-in.
    pub fn with_iterations(iterations: usize) -> Self {
        ChainConfig {
            iterations,
            burn_in: iterations / 3,
            thinning: 1,
            seed: 0,
            tracked_betas: vec![0, 1, 2, 3],
            max_lag: 50,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.iterations == 0 {
            return Err(Error::InvalidChain("iterations must be positive".into()));
        }
        if self.burn_in >= self.iterations {
            return Err(Error::InvalidChain(format!(
                "burn-in ({}) must be smaller than iterations ({})",
                self.burn_in, self.iterations
            )));
        }
        if self.thinning == 0 {
            return Err(Error::InvalidChain("thinning must be positive".into()));
        }
        Ok(())
    }

    pub fn retained_samples(&self) -> usize {
        (self.iterations - self.burn_in) / self.thinning
    }
}

/// One state of the Gibbs sampler for a single level of coefficients.
///
/// Indices are zero-based: `theta[i]` sits between `lambda[i]` and
/// `lambda[i + 1]`, and the last `theta` only has `lambda[n - 1]` on its left.
#[derive(Clone, Debug, PartialEq)]
pub struct CaravanState {
    pub beta: Vec<f64>,
    pub theta: Vec<f64>,
    pub lambda: Vec<f64>,
    pub tau: Vec<f64>,
    pub tau_gl: f64,
    pub a: f64,
}

impl CaravanState {
    pub fn len(&self) -> usize {
        self.beta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// True when every variance variable is positive and finite and every
    /// coefficient is finite.
    pub fn is_valid(&self) -> bool {
        let pos = |v: f64| v.is_finite() && v > 0.0;
        let n = self.beta.len();
        self.theta.len() == n
            && self.lambda.len() == n
            && self.tau.len() == n
            && self.beta.iter().all(|b| b.is_finite())
            && self.theta.iter().all(|&v| pos(v))
            && self.lambda.iter().all(|&v| pos(v))
            && self.tau.iter().all(|&v| pos(v))
            && pos(self.tau_gl)
            && pos(self.a)
    }
}

/// Starting state: coefficients at the observations, every variance variable
/// and both hyperparameters at one.
pub fn init_state(y: &[f64]) -> Result<CaravanState> {
    if y.is_empty() {
        return Err(Error::EmptySignal);
    }
    if let Some(i) = y.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite(i));
    }
    let n = y.len();
    Ok(CaravanState {
        beta: y.to_vec(),
        theta: vec![1.0; n],
        lambda: vec![1.0; n],
        tau: vec![1.0; n],
        tau_gl: 1.0,
        a: 1.0,
    })
}
