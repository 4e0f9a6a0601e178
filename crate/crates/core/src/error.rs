use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported filter `{0}` (expected one of: haar, d4, la8)")]
    UnsupportedFilter(String),

    #[error("number of levels must be at least 1, got {0}")]
    InvalidLevels(usize),

    #[error("signal length {len} is not a multiple of 2^{levels} = {required} (partial DWT requirement)")]
    LengthNotMultiple {
        len: usize,
        levels: usize,
        required: usize,
    },

    #[error("signal is empty")]
    EmptySignal,

    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),

    #[error("decomposition is already aligned")]
    AlreadyAligned,

    #[error("decomposition is not aligned")]
    NotAligned,

    #[error("noise level must be positive and finite, got {0}")]
    InvalidSigma(f64),

    #[error("degenerate noise estimate: median absolute deviation is zero")]
    DegenerateMad,

    #[error("input contains a non-finite value at index {0}")]
    NonFinite(usize),

    #[error("invalid chain configuration: {0}")]
    InvalidChain(String),

    #[error("invalid hyperparameter `{name}`: {value} (must be positive and finite)")]
    InvalidHyper { name: &'static str, value: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("unknown test function `{0}`")]
    UnknownFunction(String),

    #[error("unknown method `{0}`")]
    UnknownMethod(String),

    #[error("signal-to-noise ratio must be positive and finite, got {0}")]
    InvalidSnr(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
