//! One function per subcommand; each returns the rendered output and a verdict.

use std::str::FromStr;

use serde::Serialize;

use qshuffle::flags::{enumerate_flags, verify_commutation, x_spectrum_check};
use qshuffle::markov::{mixing_csv, mixing_points};
use qshuffle::qpoly::{rational_compact, Rational};
use qshuffle::spectra::{bruteforce_charpoly, build_eigenbasis, evaluate_factored, ShuffleOp};
use qshuffle::tableaux::parse_partition;

use crate::error::{CliError, Result};
use crate::render::{factored_string, render_spectrum, Format};
use crate::report::{run_verify, Route};

/// Rendered output of a subcommand.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    /// `false` when a check ran and failed; the process then exits with code 1.
    pub passed: bool,
    pub format: Format,
}

impl Output {
    fn pass(text: String, format: Format) -> Self {
        Output {
            text,
            passed: true,
            format,
        }
    }
}

pub fn parse_op(s: &str) -> Result<ShuffleOp> {
    match s {
        "r2r" => Ok(ShuffleOp::RandomToRandom),
        "b2r" => Ok(ShuffleOp::BottomToRandom),
        "r2b" => Ok(ShuffleOp::RandomToBottom),
        other => Err(CliError::Usage(format!(
            "unknown operator {other:?} (r2r, b2r, r2b)"
        ))),
    }
}

pub fn spectrum(n: usize, format: Format, all_strips: bool) -> Result<Output> {
    Ok(Output::pass(
        render_spectrum(n, format, all_strips)?,
        format,
    ))
}

/// Largest `n` accepted by `charpoly` without `--bruteforce`.
pub const MAX_CHARPOLY_N: usize = 8;

#[derive(Serialize)]
struct CharpolyOut {
    version: &'static str,
    n: usize,
    q0: Option<String>,
    factored: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    expanded: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bruteforce: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agrees: Option<bool>,
}

/// The factored characteristic polynomial of `op`, symbolic in `q` unless `q0` is given.
/// The operator name is left out so that `b2r` and `r2b` render identically.
pub fn charpoly(
    op: ShuffleOp,
    n: usize,
    q0: Option<&Rational>,
    bruteforce: bool,
    format: Format,
) -> Result<Output> {
    if n == 0 || n > MAX_CHARPOLY_N {
        return Err(CliError::Usage(format!(
            "charpoly needs 1 ≤ n ≤ {MAX_CHARPOLY_N}, got {n}"
        )));
    }
    let factors = op.factored(n)?;
    let mut out = CharpolyOut {
        version: crate::VERSION,
        n,
        q0: q0.map(rational_compact),
        factored: factored_string(&factors),
        expanded: None,
        bruteforce: None,
        agrees: None,
    };
    if bruteforce && q0.is_none() {
        return Err(CliError::Usage("--bruteforce needs --q".into()));
    }
    if let Some(q0) = q0 {
        let expected = evaluate_factored(&factors, q0)?;
        out.expanded = Some(expected.display_in("y"));
        if bruteforce {
            let brute = bruteforce_charpoly(&op.element(n), q0)?;
            out.agrees = Some(brute == expected);
            out.bruteforce = Some(brute.display_in("y"));
        }
    }
    let passed = out.agrees.unwrap_or(true);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&out)? + "\n",
        Format::Md | Format::Csv => {
            let at = out
                .q0
                .as_ref()
                .map(|q| format!(" at q = {q}"))
                .unwrap_or_default();
            let mut s = format!("χ(y){at} = {}\n", out.factored);
            if let Some(e) = &out.expanded {
                s.push_str(&format!("expanded: {e}\n"));
            }
            if let (Some(b), Some(a)) = (&out.bruteforce, out.agrees) {
                s.push_str(&format!("bruteforce: {b}\nagrees: {a}\n"));
            }
            s
        }
    };
    Ok(Output {
        text,
        passed,
        format: if format == Format::Json {
            Format::Json
        } else {
            Format::Md
        },
    })
}

pub fn verify(n: usize, q_list: &[Rational], route: Route, format: Format) -> Result<Output> {
    let report = run_verify(n, q_list, route)?;
    let text = match format {
        Format::Json => report.to_json()?,
        Format::Md => report.to_md(),
        Format::Csv => return Err(CliError::Usage("verify renders as json or md".into())),
    };
    Ok(Output {
        text,
        passed: report.passed(),
        format,
    })
}

#[derive(Serialize)]
struct EigvectorsOut {
    version: &'static str,
    lambda: String,
    q0: String,
    vectors: Vec<qshuffle::spectra::EigenvectorRecord>,
}

/// Dumps the eigenbasis of `S^λ` at `q0` as JSON.
pub fn eigvectors(lambda: &str, q0: &Rational) -> Result<Output> {
    let lam = parse_partition(lambda).map_err(|e| CliError::Usage(e.to_string()))?;
    if lam.size() > crate::report::MAX_VERIFY_N {
        return Err(CliError::Usage(format!(
            "eigvectors needs |λ| ≤ {}",
            crate::report::MAX_VERIFY_N
        )));
    }
    let out = EigvectorsOut {
        version: crate::VERSION,
        lambda: lam.to_string(),
        q0: rational_compact(q0),
        vectors: build_eigenbasis(&lam, q0)?,
    };
    Ok(Output::pass(
        serde_json::to_string_pretty(&out)? + "\n",
        Format::Json,
    ))
}

/// Exact total-variation curve from the identity, as CSV.
pub fn simulate(n: usize, q0: &Rational, steps: usize) -> Result<Output> {
    if n == 0 || n > crate::report::MAX_VERIFY_N {
        return Err(CliError::Usage(format!(
            "simulate needs 1 ≤ n ≤ {}",
            crate::report::MAX_VERIFY_N
        )));
    }
    Ok(Output::pass(
        mixing_csv(&mixing_points(n, q0, steps)?)?,
        Format::Csv,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlagCheck {
    Commutation,
    Spectrum,
    All,
}

impl FromStr for FlagCheck {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commutation" => Ok(FlagCheck::Commutation),
            "spectrum" => Ok(FlagCheck::Spectrum),
            "all" => Ok(FlagCheck::All),
            other => Err(CliError::Usage(format!(
                "unknown check {other:?} (commutation, spectrum, all)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct FlagsOut {
    version: &'static str,
    case: String,
    flags: usize,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    commutation: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalues: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicities: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    annihilated: Option<bool>,
}

pub fn flags(n: usize, p: u32, check: FlagCheck) -> Result<Output> {
    let space = enumerate_flags(n, p)?;
    let mut out = FlagsOut {
        version: crate::VERSION,
        case: format!("n={n}, p={p}"),
        flags: space.len(),
        passed: true,
        commutation: None,
        eigenvalues: None,
        multiplicities: None,
        annihilated: None,
    };
    if check != FlagCheck::Spectrum {
        let ok = verify_commutation(&space)?;
        out.commutation = Some(ok);
        out.passed &= ok;
    }
    if check != FlagCheck::Commutation {
        let s = x_spectrum_check(&space);
        out.passed &= s.passed;
        out.eigenvalues = Some(s.eigenvalues);
        out.multiplicities = Some(s.multiplicities);
        out.annihilated = Some(s.annihilated);
    }
    Ok(Output {
        text: serde_json::to_string_pretty(&out)? + "\n",
        passed: out.passed,
        format: Format::Json,
    })
}
