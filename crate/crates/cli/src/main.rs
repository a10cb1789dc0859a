//! `interp`: certificates, constructions, word counts and the sum-free set `F`
//! from the command line.

mod commands;
mod report;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{analyze, construct, count, verify_f, word_stats};

#[derive(Debug, Parser)]
#[command(name = "interp", version, about = "Interpolation sets at finite scale")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certificates and a Banach density profile for a generated set.
    Analyze(analyze::Args),
    /// Build an interpolating word for a problem file and verify it.
    Construct(construct::Args),
    /// Exact counts of low-weight words as CSV.
    Count(count::Args),
    /// Build the sum-free set F and verify its recurrence properties.
    VerifyF(verify_f::Args),
    /// Complexity profile and entropy estimate of a word.
    WordStats(word_stats::Args),
}

/// A problem with the invocation rather than with the mathematics.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// `0` when every verdict holds, `1` when one fails.
pub type Outcome = anyhow::Result<bool>;

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<interp_core::Error>() {
        Some(interp_core::Error::Refused { .. } | interp_core::Error::Construction { .. }) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let run = match cli.command {
        Command::Analyze(a) => analyze::run(a),
        Command::Construct(a) => construct::run(a),
        Command::Count(a) => count::run(a),
        Command::VerifyF(a) => verify_f::run(a),
        Command::WordStats(a) => word_stats::run(a),
    };
    match run {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
