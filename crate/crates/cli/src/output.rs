//! Rendering of row sets in the three output formats.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned columns.
    Human,
    /// Comma-separated values with a header row.
    Csv,
    /// JSON.
    #[value(alias = "json-like")]
    Json,
}

/// Parses `lo:hi`.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad lower end {lo:?}: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad upper end {hi:?}: {e}"))?;
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(format!("need finite lo <= hi, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Full-precision scientific notation for human output.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn sci_opt(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_else(|| "-".to_string())
}

/// Writes `rows` as CSV (header from the field names) or as a JSON array.
pub fn write_records<T: Serialize>(format: Format, rows: &[T]) -> Result<(), CliError> {
    let stdout = io::stdout();
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(stdout.lock());
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => write_json(rows)?,
        Format::Human => unreachable!("human output is rendered by the caller"),
    }
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(value: &T) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Prints a header and rows with right-aligned columns.
pub fn write_table(headers: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = io::stdout().lock();
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        cells
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&mut headers.iter().copied()))?;
    for row in rows {
        writeln!(out, "{}", line(&mut row.iter().map(String::as_str)))?;
    }
    Ok(())
}
