//! Optional `key = value` configuration file.
//!
//! Recognized keys: `q_list` (comma-separated rationals, the default for `verify`)
//! and `output_dir` (every command also writes its output there).

use std::path::{Path, PathBuf};

use qshuffle::qpoly::{parse_rational, Rational};

use crate::error::{CliError, Result};

/// Looked up in the working directory when `--config` is absent.
pub const DEFAULT_CONFIG: &str = "qshuffle.conf";

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Config {
    pub q_list: Option<Vec<Rational>>,
    pub output_dir: Option<PathBuf>,
}

/// Parses `2,3,1/2`.
pub fn parse_q_list(s: &str) -> Result<Vec<Rational>> {
    let qs = s
        .split(',')
        .map(|x| parse_rational(x).map_err(|e| CliError::Usage(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    if qs.is_empty() {
        return Err(CliError::Usage("empty q list".into()));
    }
    Ok(qs)
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {}: expected key = value",
                    lineno + 1
                )));
            };
            match key.trim() {
                "q_list" => cfg.q_list = Some(parse_q_list(value)?),
                "output_dir" => cfg.output_dir = Some(PathBuf::from(value.trim())),
                other => {
                    return Err(CliError::Usage(format!(
                        "config line {}: unknown key {other:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(cfg)
    }

    /// Reads `path`, or [`DEFAULT_CONFIG`] if it exists when `path` is `None`.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            Some(p) => Self::parse(&std::fs::read_to_string(p)?),
            None if Path::new(DEFAULT_CONFIG).exists() => {
                Self::parse(&std::fs::read_to_string(DEFAULT_CONFIG)?)
            }
            None => Ok(Config::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qshuffle::qpoly::{int, rat};

    #[test]
    fn parses_keys_and_comments() {
        let cfg =
            Config::parse("# defaults\nq_list = 2, 7/5\n\noutput_dir = out # here\n").unwrap();
        assert_eq!(cfg.q_list, Some(vec![int(2), rat(7, 5)]));
        assert_eq!(cfg.output_dir, Some(PathBuf::from("out")));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(Config::parse("q_list"), Err(CliError::Usage(_))));
        assert!(matches!(
            Config::parse("colour = red"),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            Config::parse("q_list = two"),
            Err(CliError::Usage(_))
        ));
    }
}
