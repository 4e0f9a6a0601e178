//! Bayesian wavelet de-noising with an inverse-gamma Markov chain shrinkage
//! prior ("caravan" prior), together with periodic DWT/MODWT transforms,
//! thresholding baselines and a replicate benchmark harness.

pub mod bench;
pub mod denoise;
pub mod error;
pub mod par;
pub mod sampler;
pub mod seed;
pub mod stats;
pub mod wavelet;

pub use error::{Error, Result};
