//! Text rendering of benchmark results next to published reference values.

use std::fmt::Write;

use super::functions::TestFunction;
use super::harness::BenchResult;

/// Published average squared errors for one study, columns
/// `bmp blk dpl hvs` at SNR 7 followed by the same at SNR 3.
#[derive(Clone, Copy, Debug)]
pub struct PublishedTable {
    pub transform: &'static str,
    pub n: usize,
    pub levels: usize,
    pub rows: &'static [(&'static str, [f64; 8])],
}

impl PublishedTable {
    /// Published value for a row label, function and SNR (7 or 3). Both
    /// HeaviSine variants map to the single published column.
    pub fn value(&self, row: &str, f: TestFunction, snr: f64) -> Option<f64> {
        let col = match f {
            TestFunction::Bumps => 0,
            TestFunction::Blocks => 1,
            TestFunction::Doppler => 2,
            TestFunction::HeaviSine | TestFunction::HeaviSineCanonical => 3,
        };
        let offset = if snr == 7.0 {
            0
        } else if snr == 3.0 {
            4
        } else {
            return None;
        };
        self.rows
            .iter()
            .find(|(r, _)| *r == row)
            .map(|(_, v)| v[col + offset])
    }
}

pub const DWT_512: PublishedTable = PublishedTable {
    transform: "dwt",
    n: 512,
    levels: 6,
    rows: &[
        ("caravan-mean", [3.9, 3.5, 1.8, 1.2, 21.0, 19.4, 8.4, 4.0]),
        ("caravan-median", [3.9, 3.6, 1.8, 1.3, 21.3, 20.3, 8.7, 4.2]),
        ("ebayes-mean", [4.9, 3.8, 2.9, 1.2, 22.8, 18.8, 12.0, 4.3]),
        ("ebayes-median", [5.6, 4.3, 3.3, 1.2, 25.9, 20.6, 13.0, 4.0]),
    ],
};

pub const MODWT_512: PublishedTable = PublishedTable {
    transform: "modwt",
    n: 512,
    levels: 4,
    rows: &[
        ("caravan-mean", [3.2, 2.9, 1.5, 1.2, 15.6, 16.2, 7.5, 5.1]),
        ("caravan-median", [3.2, 2.9, 1.5, 1.1, 15.3, 16.9, 7.3, 4.9]),
        ("ebayes-mean", [3.6, 3.0, 2.0, 1.2, 17.3, 17.7, 9.3, 4.5]),
        ("ebayes-median", [3.9, 3.2, 2.1, 1.2, 18.5, 19.4, 9.5, 4.4]),
    ],
};

pub const DWT_256: PublishedTable = PublishedTable {
    transform: "dwt",
    n: 256,
    levels: 4,
    rows: &[
        ("caravan-mean", [2.8, 2.7, 1.5, 1.1, 16.2, 15.3, 6.9, 3.1]),
        ("caravan-median", [2.8, 2.8, 1.5, 1.1, 18.0, 16.4, 7.2, 3.1]),
        ("ebayes-mean", [3.4, 2.8, 2.2, 1.0, 17.4, 13.8, 9.3, 3.3]),
        ("ebayes-median", [4.2, 3.1, 2.4, 1.0, 21.5, 15.4, 10.3, 3.1]),
    ],
};

pub const MODWT_256: PublishedTable = PublishedTable {
    transform: "modwt",
    n: 256,
    levels: 3,
    rows: &[
        ("caravan-mean", [2.3, 2.3, 1.3, 1.0, 12.2, 13.8, 6.3, 4.2]),
        ("caravan-median", [2.3, 2.3, 1.3, 1.0, 12.7, 14.6, 6.2, 4.0]),
        ("ebayes-mean", [2.6, 2.4, 1.6, 1.0, 13.0, 14.2, 8.8, 3.9]),
        ("ebayes-median", [3.0, 2.6, 1.6, 1.1, 14.5, 16.1, 9.3, 3.8]),
    ],
};

pub const PUBLISHED: [PublishedTable; 4] = [DWT_512, MODWT_512, DWT_256, MODWT_256];

pub fn published_for(transform: &str, n: usize, levels: usize) -> Option<&'static PublishedTable> {
    PUBLISHED
        .iter()
        .find(|t| t.transform == transform && t.n == n && t.levels == levels)
}

fn fmt_cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |v| format!("{v:.1}"))
}

/// Renders one block per (transform, filter, levels) setting with a column
/// per (SNR, function) pair. Rows are the methods of this run followed by the
/// published reference rows, the external EBayes rows labelled as such.
pub fn render_table(result: &BenchResult) -> String {
    let mut settings: Vec<(String, String, usize)> = Vec::new();
    let mut snrs: Vec<f64> = Vec::new();
    let mut functions: Vec<TestFunction> = Vec::new();
    for c in &result.cells {
        let key = (c.transform.clone(), c.filter.clone(), c.levels);
        if !settings.contains(&key) {
            settings.push(key);
        }
        if !snrs.contains(&c.snr) {
            snrs.push(c.snr);
        }
        if let Ok(f) = c.function.parse::<TestFunction>() {
            if !functions.contains(&f) {
                functions.push(f);
            }
        }
    }
    snrs.sort_by(|a, b| b.total_cmp(a));
    functions.sort();

    let width = 7;
    let label_width = 30;
    let mut out = String::new();
    for (transform, filter, levels) in &settings {
        let replicates = result
            .cells
            .iter()
            .find(|c| &c.transform == transform)
            .map_or(0, |c| c.replicates);
        let _ = writeln!(
            out,
            "Average squared error: N = {}, {transform}, {filter}, J0 = {levels}, {replicates} replicates",
            result.n
        );
        let mut header = format!("{:<label_width$}", "method");
        for snr in &snrs {
            for f in &functions {
                header.push_str(&format!("{:>width$}", format!("{}@{snr}", f.short())));
            }
        }
        let _ = writeln!(out, "{header}");

        let mut methods: Vec<&str> = Vec::new();
        for c in result
            .cells
            .iter()
            .filter(|c| &c.transform == transform && &c.filter == filter && c.levels == *levels)
        {
            if !methods.contains(&c.method.as_str()) {
                methods.push(&c.method);
            }
        }
        for m in &methods {
            let mut line = format!("{:<label_width$}", format!("{m} (this run)"));
            for &snr in &snrs {
                for &f in &functions {
                    let v = result
                        .cells
                        .iter()
                        .find(|c| {
                            c.method == *m
                                && &c.transform == transform
                                && &c.filter == filter
                                && c.levels == *levels
                                && c.snr == snr
                                && c.function == f.as_str()
                        })
                        .map(|c| c.mean_sq_error);
                    line.push_str(&format!("{:>width$}", fmt_cell(v)));
                }
            }
            let _ = writeln!(out, "{line}");
        }
        if let Some(table) = published_for(transform, result.n, *levels) {
            for (row, _) in table.rows {
                let label = if row.starts_with("ebayes") {
                    format!("{row} (published, external)")
                } else {
                    format!("{row} (published)")
                };
                let mut line = format!("{label:<label_width$}");
                for &snr in &snrs {
                    for &f in &functions {
                        line.push_str(&format!("{:>width$}", fmt_cell(table.value(row, f, snr))));
                    }
                }
                let _ = writeln!(out, "{line}");
            }
        }
        out.push('\n');
    }
    out
}
