//! Rendering of spectrum tables and factored characteristic polynomials.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use qshuffle::qpoly::LaurentPoly;
use qshuffle::spectra::{spectrum_table, SpectrumRow};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?} (json, csv, md)"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Md => "md",
        })
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Md => "md",
        }
    }
}

/// `(3,1) / (1,1) [1, 2]`: the strip and the contents of its cells.
pub fn strip_label(row: &SpectrumRow) -> String {
    let contents: Vec<String> = row.strip_contents().iter().map(i64::to_string).collect();
    format!("{} / {} [{}]", row.lambda, row.mu, contents.join(", "))
}

#[derive(Serialize)]
struct RowOut {
    lambda: String,
    mu: String,
    contents: Vec<i64>,
    eigenvalue: String,
    d_mu: usize,
    f_lambda: usize,
    multiplicity: usize,
}

impl From<&SpectrumRow> for RowOut {
    fn from(r: &SpectrumRow) -> Self {
        RowOut {
            lambda: r.lambda.to_string(),
            mu: r.mu.to_string(),
            contents: r.strip_contents(),
            eigenvalue: r.eigenvalue.to_string(),
            d_mu: r.d_mu,
            f_lambda: r.f_lambda,
            multiplicity: r.multiplicity,
        }
    }
}

#[derive(Serialize)]
struct SpectrumOut<'a> {
    version: &'a str,
    n: usize,
    rows: Vec<RowOut>,
}

/// Largest `n` accepted by `spectrum`.
pub const MAX_SPECTRUM_N: usize = 8;

/// Spectrum rows for `n`; rows with `d^μ = 0` only when `all_strips` is set.
pub fn spectrum_rows(n: usize, all_strips: bool) -> Result<Vec<SpectrumRow>> {
    if n == 0 || n > MAX_SPECTRUM_N {
        return Err(CliError::Usage(format!(
            "spectrum needs 1 ≤ n ≤ {MAX_SPECTRUM_N}, got {n}"
        )));
    }
    Ok(spectrum_table(n)
        .into_iter()
        .filter(|r| all_strips || r.d_mu > 0)
        .collect())
}

/// The markdown table, one row per strip, in the column layout of the published tables.
pub fn spectrum_md(n: usize, rows: &[SpectrumRow]) -> String {
    let mut out = format!(
        "### n = {n}\n\n| λ/μ [contents] | eigenvalue | d^μ | d^μ f^λ |\n|---|---|---|---|\n"
    );
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            strip_label(r),
            r.eigenvalue,
            r.d_mu,
            r.multiplicity
        ));
    }
    out
}

pub fn render_spectrum(n: usize, format: Format, all_strips: bool) -> Result<String> {
    let rows = spectrum_rows(n, all_strips)?;
    match format {
        Format::Md => Ok(spectrum_md(n, &rows)),
        Format::Json => {
            let out = SpectrumOut {
                version: crate::VERSION,
                n,
                rows: rows.iter().map(RowOut::from).collect(),
            };
            Ok(serde_json::to_string_pretty(&out)? + "\n")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "lambda",
                "mu",
                "contents",
                "eigenvalue",
                "d_mu",
                "f_lambda",
                "multiplicity",
            ])?;
            for r in &rows {
                let o = RowOut::from(r);
                let contents: Vec<String> = o.contents.iter().map(i64::to_string).collect();
                w.write_record([
                    o.lambda,
                    o.mu,
                    contents.join(" "),
                    o.eigenvalue,
                    o.d_mu.to_string(),
                    o.f_lambda.to_string(),
                    o.multiplicity.to_string(),
                ])?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
    }
}

/// `(y - (E))^m` factors joined by spaces; `y` itself when `E = 0`.
pub fn factored_string(factors: &[(LaurentPoly, usize)]) -> String {
    factors
        .iter()
        .filter(|(_, m)| *m > 0)
        .map(|(e, m)| {
            let base = if e.is_zero() {
                "y".to_string()
            } else {
                format!("(y - ({e}))")
            };
            if *m == 1 {
                base
            } else {
                format!("{base}^{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
