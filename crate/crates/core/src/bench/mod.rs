//! Synthetic test signals, the replicate benchmark harness and table output.

mod functions;
mod harness;
mod table;

pub use functions::{add_noise, gen_test_function, grid, squared_error, TestFunction};
pub use harness::{
    dataset_seed, preset, run_benchmark, BenchCell, BenchResult, BenchSpec, Estimator,
    ReplicateRecord, DEFAULT_SEED, PRESETS,
};
pub use table::{published_for, render_table, PublishedTable, PUBLISHED};
