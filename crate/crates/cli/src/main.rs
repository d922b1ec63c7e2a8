mod add_instructions;
mod cli;
mod config;
mod error;
mod evaluate;
mod extensions;
mod generate;
mod matrix;
mod run;

use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, Command};
use crate::error::CliResult;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Generate(args) => generate::run(args),
        Command::Run(args) => run::run(args),
        Command::Evaluate(args) => evaluate::run(args),
        Command::Matrix(args) => matrix::run(args),
        Command::AddInstructions(args) => add_instructions::run(args),
    }
}
