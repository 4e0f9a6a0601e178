//! Reading one-dimensional data files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// A data series with an optional sampling index.
#[derive(Clone, Debug, PartialEq)]
pub struct DataFile {
    pub index: Option<Vec<f64>>,
    pub values: Vec<f64>,
}

impl DataFile {
    /// The sampling index, or `1..=n` when the file had none.
    pub fn index_or_position(&self) -> Vec<f64> {
        match &self.index {
            Some(t) => t.clone(),
            None => (1..=self.values.len()).map(|i| i as f64).collect(),
        }
    }
}

fn parse_number(s: &str, line: usize, path: &Path) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .with_context(|| format!("{}:{line}: `{}` is not a number", path.display(), s.trim()))?;
    if !v.is_finite() {
        bail!("{}:{line}: value is not finite", path.display());
    }
    Ok(v)
}

/// Reads either plain numbers, one per line, or a CSV file with a header
/// containing a `value` column and optionally a `t` or `index` column.
/// Blank lines and lines starting with `#` are skipped.
pub fn read_data_file(path: &Path) -> Result<DataFile> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let Some((_, first)) = lines.clone().next() else {
        bail!("{} contains no data", path.display());
    };
    let is_csv = first.contains(',') || first.parse::<f64>().is_err();

    let data = if is_csv {
        read_csv(&text, path)?
    } else {
        let values = lines
            .by_ref()
            .map(|(no, l)| parse_number(l, no, path))
            .collect::<Result<Vec<_>>>()?;
        DataFile {
            index: None,
            values,
        }
    };
    if data.values.len() < 2 {
        bail!(
            "{} must contain at least 2 values, found {}",
            path.display(),
            data.values.len()
        );
    }
    Ok(data)
}

fn read_csv(text: &str, path: &Path) -> Result<DataFile> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    let col = |name: &str| headers.iter().position(|h| h.eq_ignore_ascii_case(name));
    let Some(vcol) = col("value") else {
        bail!(
            "{}: CSV input needs a `value` column (found: {})",
            path.display(),
            headers.iter().collect::<Vec<_>>().join(", ")
        );
    };
    let icol = col("t").or_else(|| col("index"));

    let mut values = Vec::new();
    let mut index = Vec::new();
    for rec in reader.records() {
        let rec = rec.with_context(|| format!("malformed CSV in {}", path.display()))?;
        let line = rec.position().map_or(0, |p| p.line() as usize);
        values.push(parse_number(rec.get(vcol).unwrap_or(""), line, path)?);
        if let Some(i) = icol {
            index.push(parse_number(rec.get(i).unwrap_or(""), line, path)?);
        }
    }
    Ok(DataFile {
        index: icol.map(|_| index),
        values,
    })
}
