mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Outcome of a subcommand that did not run cleanly.
#[derive(Debug)]
pub enum Failure {
    /// The model has dimensional violations (exit 1).
    Violations,
    /// Bad input: unreadable or unparseable files, invalid flags (exit 2).
    Config(String),
    /// The numerics could not produce a result (exit 3).
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Violations => 1,
            Failure::Config(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => commands::check(&a),
        Command::Steady(a) => commands::steady(&a),
        Command::Simulate(a) => commands::simulate(&a),
        Command::Phase(a) => commands::phase(&a),
        Command::Welfare(a) => commands::welfare(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Violations => {}
                Failure::Config(msg) | Failure::Numeric(msg) => eprintln!("dimcheck: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
