//! `rmi` — sampling, analysis, and verification for the Erdős–Rényi random
//! monomial ideal model.
//!
//! Exit codes: 0 success, 1 failed verification checks or I/O trouble,
//! 2 usage/parameter/parse errors, 3 resource limits (enumeration caps,
//! cover enumeration limits).

use clap::Parser;
use rmi_core::Error;
use std::process::ExitCode;

mod commands;

use commands::{AnalyzeArgs, McArgs, OracleArgs, SampleArgs, SweepArgs, VerifyArgs};

#[derive(Parser)]
#[command(
    name = "rmi",
    version,
    about = "Random monomial ideals from random graphs: sampling, exact oracles, Monte Carlo",
    long_about = None
)]
enum Cli {
    /// Sample graphs from G(n, p) and optionally their edge/cover ideals.
    Sample(SampleArgs),
    /// Read a graph file and report its ideal-theoretic invariants.
    Analyze(AnalyzeArgs),
    /// Monte Carlo estimate of an event probability under G(n, p).
    Mc(McArgs),
    /// Run an event estimate across graph sizes with p set by a schedule.
    Sweep(SweepArgs),
    /// Exhaustive exact probabilities and moments for small n.
    Oracle(OracleArgs),
    /// Run the acceptance checks and print the pass/fail table.
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli {
        Cli::Sample(a) => commands::run_sample(&a),
        Cli::Analyze(a) => commands::run_analyze(&a),
        Cli::Mc(a) => commands::run_mc(&a),
        Cli::Sweep(a) => commands::run_sweep(&a),
        Cli::Oracle(a) => commands::run_oracle(&a),
        Cli::Verify(a) => commands::run_verify(&a),
    };
    match run {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parameter(_) | Error::Parse(_) => ExitCode::from(2),
                Error::Resource(_) => ExitCode::from(3),
                Error::Io(_) => ExitCode::FAILURE,
            }
        }
    }
}
