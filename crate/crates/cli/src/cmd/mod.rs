mod graph;
mod orbits;
mod scan;
mod spectrum;
mod verify;

use queen_spectra::{SpectrumRow, SpectrumTable};

use crate::cli::{Command, RunConfig};
use crate::error::CliError;
use crate::report::{render, Envelope, Payload};

pub fn dispatch(command: &Command, config: &RunConfig) -> Result<bool, CliError> {
    match *command {
        Command::Spectrum { n, method } => spectrum::run(n, method, config),
        Command::Verify {
            n,
            seed,
            walk_budget,
        } => verify::run(n, seed, walk_budget, config),
        Command::Orbits { n } => orbits::run(n, config),
        Command::Scan { range } => scan::run(range, config),
        Command::Graph { n } => graph::run(n, config),
    }
}

fn emit<P: Payload>(env: &Envelope<P>, config: &RunConfig) -> Result<bool, CliError> {
    let mut out = crate::open_output(config)?;
    render(env, config.format, &mut out)?;
    Ok(env.passed())
}

/// Compact row listing used when two tables are compared in a report.
pub(crate) fn rows_text(rows: &[SpectrumRow]) -> String {
    rows.iter()
        .map(|r| format!("({},{},{})", r.mu, r.lambda, r.multiplicity))
        .collect::<Vec<_>>()
        .join(" ")
}

pub(crate) fn support_text(t: &SpectrumTable) -> String {
    rows_text(&t.support())
}
