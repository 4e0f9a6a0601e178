//! The subcommands. Each one computes everything in memory first and only
//! then writes its files through an [`OutputSet`].

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use caravan::bench::{
    add_noise, dataset_seed, gen_test_function, grid, preset, render_table, run_benchmark,
    BenchSpec, TestFunction, PRESETS,
};
use caravan::denoise::{denoise, peak_height, DenoiseConfig, Method, SigmaMode};
use caravan::sampler::{export_diagnostics, ChainConfig};
use caravan::wavelet::{
    align, alignment_shifts, dwt_forward, modwt_forward, mra, FilterName, QmfFilter, TransformKind,
    WaveletDecomposition,
};
use clap::Args;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::input::read_data_file;
use crate::output::OutputSet;
use crate::spec_file::parse_bench_spec;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = caravan::bench::DEFAULT_SEED;

/// Settings of the `nmr` preset: four-level LA8 DWT, posterior median,
/// 120 000 sweeps of which the first third is burn-in.
pub const NMR_ITERATIONS: usize = 120_000;

#[derive(Args, Debug, Clone)]
pub struct MethodOpts {
    /// Wavelet transform [dwt, modwt] (default dwt)
    #[arg(long)]
    pub transform: Option<TransformKind>,
    /// Wavelet filter [haar, d4, la8] (default la8)
    #[arg(long)]
    pub filter: Option<FilterName>,
    /// Number of decomposition levels (default 6 for the DWT, 4 for the MODWT)
    #[arg(long)]
    pub levels: Option<usize>,
    /// De-noising method [caravan-mean, caravan-median, hard, soft]
    #[arg(long)]
    pub method: Option<Method>,
    /// Gibbs sweeps per level (default 30000)
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Discarded initial sweeps (default: a third of --iterations)
    #[arg(long)]
    pub burn_in: Option<usize>,
    /// Master seed of every random draw
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Noise estimation [mad-level1, mad-each, mad-scaled]
    /// (default mad-level1 for the DWT, mad-each for the MODWT)
    #[arg(long)]
    pub sigma_mode: Option<SigmaMode>,
    /// Shrink zero-phase aligned coefficients
    #[arg(long)]
    pub aligned: bool,
    /// Named settings that the flags above refine [nmr]
    #[arg(long)]
    pub preset: Option<String>,
}

impl MethodOpts {
    pub fn config(&self) -> Result<DenoiseConfig> {
        let nmr = match self.preset.as_deref() {
            None => false,
            Some("nmr") => true,
            Some(other) => bail!("unknown denoise preset `{other}` (available: nmr)"),
        };
        let transform = self.transform.unwrap_or(TransformKind::Dwt);
        let mut cfg = DenoiseConfig::new(transform);
        if nmr {
            cfg.levels = 4;
            cfg.method = Method::CaravanMedian;
            cfg.chain = ChainConfig::with_iterations(NMR_ITERATIONS);
        }
        if let Some(f) = self.filter {
            cfg.filter = f;
        }
        if let Some(l) = self.levels {
            cfg.levels = l;
        }
        if let Some(m) = self.method {
            cfg.method = m;
        }
        if let Some(it) = self.iterations {
            cfg.chain = ChainConfig::with_iterations(it);
        }
        if let Some(b) = self.burn_in {
            cfg.chain.burn_in = b;
        }
        if let Some(s) = self.sigma_mode {
            cfg.sigma_mode = s;
        }
        cfg.chain.seed = self.seed;
        cfg.align = self.aligned;
        cfg.validate()?;
        Ok(cfg)
    }
}

fn csv_writer(path: &Path) -> Result<csv::Writer<File>> {
    csv::Writer::from_path(path).with_context(|| format!("cannot write {}", path.display()))
}

pub fn cmd_denoise(input: &Path, opts: &MethodOpts, out_dir: &Path) -> Result<()> {
    let cfg = opts.config()?;
    let data = read_data_file(input)?;
    let result = denoise(&data.values, &cfg)
        .with_context(|| format!("cannot de-noise {}", input.display()))?;

    let mut out = OutputSet::in_dir(out_dir)?;
    let t = data.index_or_position();
    let mut w = csv_writer(&out.file("estimate.csv"))?;
    w.write_record(["t", "observed", "estimate"])?;
    for ((t, x), e) in t.iter().zip(&data.values).zip(&result.estimate) {
        w.serialize((t, x, e))?;
    }
    w.flush()?;

    let mut w = csv_writer(&out.file("sigma.csv"))?;
    w.write_record(["level", "sigma"])?;
    for (j, s) in result.sigma_estimates.iter().enumerate() {
        w.serialize((j + 1, s))?;
    }
    w.flush()?;

    if !result.summaries.is_empty() {
        let mut w = csv_writer(&out.file("chains.csv"))?;
        w.write_record([
            "level",
            "coefficients",
            "retained_samples",
            "acceptance_rate_a",
            "acceptance_rate_tau_gl",
        ])?;
        for (j, s) in result.summaries.iter().enumerate() {
            w.serialize((
                j + 1,
                s.mean.len(),
                s.retained_samples,
                s.acceptance_rate_a,
                s.acceptance_rate_tau_gl,
            ))?;
        }
        w.flush()?;
        for (j, d) in result.diagnostics.iter().enumerate() {
            let stem = format!("level{}", j + 1);
            for suffix in ["_trace.csv", "_acf.csv", "_running_mean.csv"] {
                out.file(format!("{stem}{suffix}"));
            }
            export_diagnostics(d, &out_dir.join(stem))?;
        }
    }

    println!(
        "{} with {} {} ({} levels) on {} observations",
        cfg.method,
        cfg.filter,
        cfg.transform,
        cfg.levels,
        data.values.len()
    );
    if cfg.method.is_caravan() {
        println!(
            "chains: {} sweeps, {} burn-in, seed {}",
            cfg.chain.iterations, cfg.chain.burn_in, cfg.chain.seed
        );
    }
    let sig: Vec<String> = result
        .sigma_estimates
        .iter()
        .map(|s| format!("{s:.6}"))
        .collect();
    println!("noise sigma by level: {}", sig.join(" "));
    println!("maximum of the data: {:.4}", peak_height(&data.values));
    println!("peak height: {:.4}", peak_height(&result.estimate));
    let n = out.files().len();
    out.commit();
    println!("wrote {n} files to {}", out_dir.display());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct SimulateOpts {
    /// Test function [bumps, blocks, doppler, heavisine, heavisine-canonical]
    #[arg(long)]
    pub function: TestFunction,
    /// Number of samples
    #[arg(long, default_value_t = 512)]
    pub n: usize,
    /// Signal-to-noise ratio sd(f) / sigma
    #[arg(long)]
    pub snr: f64,
    /// Master seed; the noise equals replicate 0 of a benchmark with this seed
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Output CSV file
    #[arg(long)]
    pub out: PathBuf,
}

pub fn cmd_simulate(opts: &SimulateOpts) -> Result<()> {
    let f = gen_test_function(opts.function, opts.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(dataset_seed(opts.seed, opts.function, opts.snr, 0));
    let (x, sigma) = add_noise(&f, opts.snr, &mut rng)?;

    let mut out = OutputSet::loose();
    let path = out.file(&opts.out);
    let mut file = BufWriter::new(
        File::create(&path).with_context(|| format!("cannot write {}", path.display()))?,
    );
    writeln!(
        file,
        "# function={} n={} snr={} seed={} sigma={}",
        opts.function, opts.n, opts.snr, opts.seed, sigma
    )?;
    let mut w = csv::Writer::from_writer(file);
    w.write_record(["t", "f", "value"])?;
    for ((t, f), x) in grid(opts.n).iter().zip(&f).zip(&x) {
        w.serialize((t, f, x))?;
    }
    w.flush()?;
    drop(w);
    out.commit();
    println!("wrote {} (sigma = {sigma})", path.display());
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct BenchOpts {
    /// TOML benchmark description
    pub spec: Option<PathBuf>,
    /// Built-in study instead of a spec file
    /// [table1, table1-fast, table2, table3, table4, baseline]
    #[arg(long, conflicts_with = "spec")]
    pub preset: Option<String>,
    /// Overrides the seed of the spec or preset
    #[arg(long)]
    pub seed: Option<u64>,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

pub fn bench_spec(opts: &BenchOpts) -> Result<BenchSpec> {
    let mut spec = match (&opts.spec, &opts.preset) {
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("cannot read {}", path.display()))?;
            parse_bench_spec(&text).with_context(|| format!("in {}", path.display()))?
        }
        (None, Some(name)) => match preset(name) {
            Some(s) => s,
            None => bail!(
                "unknown benchmark preset `{name}` (available: {})",
                PRESETS.join(", ")
            ),
        },
        _ => bail!("give either a spec file or --preset"),
    };
    if let Some(s) = opts.seed {
        spec.seed = s;
    }
    Ok(spec)
}

pub fn cmd_bench(opts: &BenchOpts) -> Result<()> {
    let spec = bench_spec(opts)?;
    let start = Instant::now();
    let result = run_benchmark(&spec)?;
    let table = render_table(&result);

    let mut out = OutputSet::in_dir(&opts.out)?;
    result.write_cells_csv(&out.file("cells.csv"))?;
    result.write_records_csv(&out.file("replicates.csv"))?;
    fs::write(out.file("table.txt"), &table)?;
    out.commit();

    print!("{table}");
    eprintln!(
        "{} datasets in {:.1} s, results in {}",
        spec.functions.len() * spec.snr_values.len() * spec.replicates,
        start.elapsed().as_secs_f64(),
        opts.out.display()
    );
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct TransformOpts {
    /// Wavelet transform [dwt, modwt]
    #[arg(long, default_value = "dwt")]
    pub transform: TransformKind,
    /// Wavelet filter [haar, d4, la8]
    #[arg(long, default_value = "la8")]
    pub filter: FilterName,
    /// Number of decomposition levels (default 6 for the DWT, 4 for the MODWT)
    #[arg(long)]
    pub levels: Option<usize>,
    /// Circularly shift the coefficients to zero phase
    #[arg(long)]
    pub aligned: bool,
    /// Also write the multiresolution analysis
    #[arg(long)]
    pub mra: bool,
    /// Output directory
    #[arg(long)]
    pub out: PathBuf,
}

fn write_coefficients(d: &WaveletDecomposition, path: &Path) -> Result<()> {
    let mut w = csv_writer(path)?;
    w.write_record(["level", "kind", "index", "coefficient"])?;
    for (j, level) in d.wavelet.iter().enumerate() {
        for (k, c) in level.iter().enumerate() {
            w.serialize((j + 1, "wavelet", k, c))?;
        }
    }
    for (k, c) in d.scaling.iter().enumerate() {
        w.serialize((d.levels, "scaling", k, c))?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_transform(input: &Path, opts: &TransformOpts) -> Result<()> {
    let data = read_data_file(input)?;
    let filter = QmfFilter::new(opts.filter);
    let levels = opts.levels.unwrap_or(match opts.transform {
        TransformKind::Dwt => 6,
        TransformKind::Modwt => 4,
    });
    let mut d = match opts.transform {
        TransformKind::Dwt => dwt_forward(&data.values, &filter, levels)?,
        TransformKind::Modwt => modwt_forward(&data.values, &filter, levels)?,
    };
    if opts.aligned {
        d = align(&d)?;
    }
    let m = if opts.mra { Some(mra(&d)?) } else { None };

    let mut out = OutputSet::in_dir(&opts.out)?;
    write_coefficients(&d, &out.file("coefficients.csv"))?;
    if let Some(m) = &m {
        let mut w = csv_writer(&out.file("mra.csv"))?;
        let mut header = vec!["t".to_string(), "value".to_string()];
        header.extend((1..=levels).map(|j| format!("d{j}")));
        header.push(format!("s{levels}"));
        w.write_record(&header)?;
        let t = data.index_or_position();
        for i in 0..data.values.len() {
            let mut row = vec![t[i], data.values[i]];
            row.extend(m.details.iter().map(|dj| dj[i]));
            row.push(m.smooth[i]);
            w.serialize(row)?;
        }
        w.flush()?;
    }
    let files = out.commit();

    println!(
        "{} {} with {levels} levels on {} observations",
        opts.filter,
        opts.transform,
        data.values.len()
    );
    if opts.aligned {
        let s = alignment_shifts(opts.transform, &filter, levels, data.values.len());
        println!(
            "aligned: wavelet shifts {:?}, scaling shift {}",
            s.wavelet, s.scaling
        );
    }
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(())
}
