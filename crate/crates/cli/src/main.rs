mod cli;
mod cmd;
mod error;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::cli::{Cli, RunConfig};
use crate::error::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Runs the command; `Ok(false)` means a check failed.
fn run(cli: &Cli) -> Result<bool, CliError> {
    let config = RunConfig::from_cli(cli)?;
    let pool = {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(t) = config.threads {
            builder = builder.num_threads(t);
        }
        builder
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?
    };
    pool.install(|| cmd::dispatch(&cli.command, &config))
}

/// Report destination: `--out` if given, else stdout.
pub(crate) fn open_output(config: &RunConfig) -> Result<Box<dyn Write>, CliError> {
    Ok(match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
