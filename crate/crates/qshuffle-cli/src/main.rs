use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qshuffle::qpoly::{parse_rational, Rational};
use qshuffle_cli::commands::{self, FlagCheck, Output};
use qshuffle_cli::config::{parse_q_list, Config};
use qshuffle_cli::error::{Result, EXIT_FAILURE, EXIT_USAGE};
use qshuffle_cli::render::Format;
use qshuffle_cli::report::Route;

/// Used by `verify` when neither `--q` nor the config file gives a list.
const DEFAULT_Q_LIST: &str = "2,3,1/2,7/5";

#[derive(Parser)]
#[command(name = "qshuffle", version = qshuffle_cli::VERSION, about = "Exact spectra of the q-deformed random-to-random shuffle")]
struct Cli {
    /// Configuration file (key = value); defaults to ./qshuffle.conf when present.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Also write each command's output to this directory.
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue table of R_n, one row per horizontal strip.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "md")]
        format: Format,
        /// Keep rows whose multiplicity d^μ is zero.
        #[arg(long)]
        all_strips: bool,
    },
    /// Factored characteristic polynomial of r2r, b2r or r2b.
    Charpoly {
        #[arg(long)]
        op: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational)]
        q: Option<Rational>,
        /// Compare with the characteristic polynomial of the regular representation.
        #[arg(long)]
        bruteforce: bool,
        #[arg(long, default_value = "md")]
        format: Format,
    },
    /// Runs every check for n at each q.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals, e.g. 2,3,1/2.
        #[arg(long)]
        q: Option<String>,
        #[arg(long, default_value = "regular")]
        route: Route,
        #[arg(long, default_value = "md")]
        format: Format,
    },
    /// Dumps the eigenbasis of S^λ as JSON.
    Eigvectors {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_parser = rational)]
        q: Rational,
    },
    /// Exact total-variation distance to the stationary law, as CSV.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = rational)]
        q: Rational,
        #[arg(long)]
        steps: usize,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Brown's operator on complete flags over F_p.
    Flags {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "all")]
        check: FlagCheck,
    },
}

fn run(cli: Cli) -> Result<Output> {
    let config = Config::load(cli.config.as_deref())?;
    let out_dir = cli.out_dir.or(config.output_dir.clone());
    let (stem, output, csv_path) = match cli.command {
        Command::Spectrum {
            n,
            format,
            all_strips,
        } => (
            format!("spectrum_n{n}"),
            commands::spectrum(n, format, all_strips)?,
            None,
        ),
        Command::Charpoly {
            op,
            n,
            q,
            bruteforce,
            format,
        } => (
            format!("charpoly_{op}_n{n}"),
            commands::charpoly(commands::parse_op(&op)?, n, q.as_ref(), bruteforce, format)?,
            None,
        ),
        Command::Verify {
            n,
            q,
            route,
            format,
        } => {
            let qs = match (q, config.q_list) {
                (Some(s), _) => parse_q_list(&s)?,
                (None, Some(list)) => list,
                (None, None) => parse_q_list(DEFAULT_Q_LIST)?,
            };
            (
                format!("verify_n{n}"),
                commands::verify(n, &qs, route, format)?,
                None,
            )
        }
        Command::Eigvectors { lambda, q } => {
            let out = commands::eigvectors(&lambda, &q)?;
            let name: String = lambda.chars().filter(char::is_ascii_digit).collect();
            (format!("eigvectors_{name}"), out, None)
        }
        Command::Simulate { n, q, steps, csv } => (
            format!("simulate_n{n}"),
            commands::simulate(n, &q, steps)?,
            csv,
        ),
        Command::Flags { n, p, check } => (
            format!("flags_n{n}_p{p}"),
            commands::flags(n, p, check)?,
            None,
        ),
    };
    if let Some(path) = &csv_path {
        std::fs::write(path, &output.text)?;
    } else {
        print!("{}", output.text);
    }
    if let Some(dir) = out_dir {
        write_copy(&dir, &stem, &output)?;
    }
    Ok(output)
}

fn write_copy(dir: &Path, stem: &str, output: &Output) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(
        dir.join(format!("{stem}.{}", output.format.extension())),
        &output.text,
    )?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) if out.passed => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_FAILURE as u8),
        // errors stop a command before it can report, including inadmissible q
        Err(e) => {
            eprintln!("qshuffle: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
