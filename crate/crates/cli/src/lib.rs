//! Command implementations behind the `hsbraid` binary.
//!
//! Every command writes its report to the supplied writer and returns a
//! [`Status`]; library errors are surfaced to the caller, which maps them to
//! exit status 2.

use clap::{Args, Parser, Subcommand};
use hsbraid::states::StateSpec;

mod commands;
mod render;

pub use commands::run;

/// Pauli-basis decompositions, separability checks and braid Bell bases.
#[derive(Debug, Parser)]
#[command(name = "hsbraid", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Numerical tolerance used by every check.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tol)]
    pub tol: f64,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pauli coefficients of a state, grouped by weight.
    Decompose {
        #[command(flatten)]
        state: StateArg,
        /// Also list coefficients below 1e-12.
        #[arg(long)]
        full: bool,
    },
    /// Coefficient-sum criterion with PPT cross-checks.
    Separability {
        #[command(flatten)]
        state: StateArg,
        /// Print the explicit product-state mixture when one exists.
        #[arg(long)]
        certificate: bool,
    },
    /// Criterion verdict for every subset of two or more qubits.
    Report {
        #[command(flatten)]
        state: StateArg,
    },
    /// Braid-group relations and the Yang-Baxter equation.
    BraidCheck {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// The braid Bell basis with its Pauli tables.
    BellStates {
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Also list coefficients below 1e-12.
        #[arg(long)]
        full: bool,
    },
    /// Criterion and PPT verdicts along the Werner line.
    WernerScan {
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u32).range(2..=100_001))]
        steps: u32,
    },
}

#[derive(Debug, Args)]
pub struct StateArg {
    /// ghz:N, singlet, werner:P, basis:N:I, bell:N:I or file:PATH.
    #[arg(long = "state", value_name = "SPEC")]
    pub spec: StateSpec,
}

/// Outcome of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    CheckFailed,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] hsbraid::Error),
    #[error("state {spec}: {source}")]
    State { spec: String, source: hsbraid::Error },
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err("tolerance must be positive and finite".into())
    }
}
