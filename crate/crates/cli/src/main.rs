//! `altzeta`: evaluate partial sums, verify the finite identities, demonstrate
//! the zeros on Re(s) = 1, and measure defect decay. Output is CSV.
//!
//! Exit codes: 0 success, 1 checks computed but out of tolerance, 2 usage or
//! contract error.

mod commands;
mod csv;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use altzeta::config::Tolerances;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::Outcome;

fn finite(raw: &str) -> Result<f64, String> {
    let x: f64 = raw.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err("value must be finite".into())
    }
}

fn positive(raw: &str) -> Result<f64, String> {
    let x = finite(raw)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err("value must be positive".into())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "altzeta",
    version,
    about = "Finite-sum identities and zeros of the alternating zeta function"
)]
struct Cli {
    /// Write CSV here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ζ_N(s), ζ*_N(s), d_N(s) and the integral closed form at one point.
    Eval {
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = finite, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        n: usize,
    },
    /// Residuals of the three finite identities over N = 1, 2, 4, … ≤ n-max.
    Residuals {
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = finite, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        n_max: usize,
        /// Relative residual tolerance.
        #[arg(long, value_parser = positive)]
        tol: Option<f64>,
    },
    /// |ζ*_{2N}(s_k)| at s_k = 1 + 2kπi/ln 2 over N = 1, 2, 4, … ≤ n-max.
    Zeros {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, default_value_t = 4096)]
        n_max: usize,
        /// Absolute tolerance for the reference value at s_k.
        #[arg(long, value_parser = positive)]
        tol: Option<f64>,
    },
    /// d_N(s) over a doubling ladder from 16 and a power-law fit.
    Converge {
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = finite, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 16384)]
        n_max: usize,
    },
    /// Power-law fits of d_N(σ + it) across the critical strip.
    Sweep {
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        sigma_min: f64,
        #[arg(long, value_parser = finite, allow_hyphen_values = true)]
        sigma_max: f64,
        #[arg(long, value_parser = positive)]
        sigma_step: f64,
        #[arg(long, value_parser = finite, default_value_t = 0.0, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = 4096)]
        n_max: usize,
    },
}

fn run(cli: Cli) -> Result<(String, Outcome), altzeta::Error> {
    let mut tol = Tolerances::default();
    match cli.command {
        Command::Eval { sigma, t, n } => commands::eval(sigma, t, n, &tol),
        Command::Residuals {
            sigma,
            t,
            n_max,
            tol: residual,
        } => {
            if let Some(x) = residual {
                tol.residual = x;
            }
            commands::residuals_cmd(sigma, t, n_max, &tol)
        }
        Command::Zeros {
            k,
            n_max,
            tol: reference,
        } => {
            if let Some(x) = reference {
                tol.reference = x;
            }
            commands::zeros(k, n_max, &tol)
        }
        Command::Converge { sigma, t, n_max } => commands::converge(sigma, t, n_max, &tol),
        Command::Sweep {
            sigma_min,
            sigma_max,
            sigma_step,
            t,
            n_max,
        } => commands::sweep(sigma_min, sigma_max, sigma_step, t, n_max, &tol),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            _ => {
                let msg = e.to_string();
                eprintln!("{}", msg.lines().next().unwrap_or("invalid arguments"));
                return ExitCode::from(2);
            }
        },
    };
    let out = cli.out.clone();

    let (text, outcome) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };

    let written = match &out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }

    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::Fail => {
            eprintln!("checks failed tolerance");
            ExitCode::from(1)
        }
    }
}
