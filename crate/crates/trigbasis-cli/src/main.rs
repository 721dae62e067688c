use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use trigbasis_cli::args::{Cli, Command};
use trigbasis_cli::commands::{cmd_basis, cmd_fit, cmd_gram, cmd_grid};
use trigbasis_cli::error::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let (table, report) = match &cli.command {
        Command::Grid(c) => cmd_grid(c)?,
        Command::Basis(c) => cmd_basis(c)?,
        Command::Fit(c) => cmd_fit(c)?,
        Command::Gram(c) => cmd_gram(c)?,
    };
    let output = cli.command.output();
    let data = table.render(output.format);
    let summary = report.render();
    match &output.out {
        Some(path) => {
            fs::write(path, data)?;
            // data went to a file, so the summary may use stdout
            std::io::stdout().write_all(summary.as_bytes())?;
        }
        None => {
            std::io::stdout().write_all(data.as_bytes())?;
            std::io::stderr().write_all(summary.as_bytes())?;
        }
    }
    Ok(())
}
