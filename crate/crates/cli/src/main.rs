//! `adasort` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or precondition error, 2 data or I/O
//! error, 3 verification failure.

mod bench;
mod commands;

use std::fmt;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub msg: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 1, msg: msg.into() }
    }

    pub fn data(msg: impl Into<String>) -> Self {
        CliError { code: 2, msg: msg.into() }
    }

    pub fn verification(msg: impl Into<String>) -> Self {
        CliError { code: 3, msg: msg.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "adasort", version, about = "Comparison-metered adaptive sorting toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an input sequence file.
    Gen(commands::GenArgs),
    /// Report presortedness measures of a sequence file.
    Measure(commands::MeasureArgs),
    /// Sort a sequence file with one algorithm and verify the result.
    Sort(commands::SortArgs),
    /// Run a benchmark sweep and emit one CSV row per trial.
    Bench(bench::BenchArgs),
    /// Enumerate permutations of 1..=n by maximal sorted-type.
    Census(commands::CensusArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    let result = match cli.command {
        Command::Gen(args) => commands::gen(args),
        Command::Measure(args) => commands::measure(args),
        Command::Sort(args) => commands::sort(args),
        Command::Bench(args) => bench::run(args),
        Command::Census(args) => commands::census(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("adasort: {e}");
            ExitCode::from(e.code)
        }
    }
}
