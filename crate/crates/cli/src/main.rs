//! `caravan`: wavelet de-noising from the command line.
//!
//! All randomness comes from `--seed` (default 1). `CARAVAN_THREADS` caps
//! the number of worker threads.

mod commands;
mod input;
mod output;
mod spec_file;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use commands::{BenchOpts, MethodOpts, SimulateOpts, TransformOpts};

#[derive(Parser, Debug)]
#[command(
    name = "caravan",
    version,
    about = "Wavelet de-noising with an inverse-gamma Markov chain prior"
)]
#[command(args_override_self = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// De-noise a data file: one value per line, or CSV with a `value` column
    Denoise {
        input: PathBuf,
        #[command(flatten)]
        opts: MethodOpts,
        /// Output directory
        #[arg(long)]
        out: PathBuf,
    },
    /// Write a noisy test-function dataset as CSV (t, f, value)
    Simulate(SimulateOpts),
    /// Run a replicate benchmark from a TOML spec or a preset
    Bench(BenchOpts),
    /// Write wavelet coefficients and, optionally, the multiresolution analysis
    Transform {
        input: PathBuf,
        #[command(flatten)]
        opts: TransformOpts,
    },
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("CARAVAN_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .with_context(|| format!("CARAVAN_THREADS must be a positive integer, got `{raw}`"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("cannot configure the worker pool")?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    configure_threads()?;
    match &cli.command {
        Command::Denoise { input, opts, out } => commands::cmd_denoise(input, opts, out),
        Command::Simulate(opts) => commands::cmd_simulate(opts),
        Command::Bench(opts) => commands::cmd_bench(opts),
        Command::Transform { input, opts } => commands::cmd_transform(input, opts),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
