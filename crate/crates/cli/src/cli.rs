use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use queen_spectra::{Budget, Modulus};

use crate::error::CliError;
use crate::report::Format;

/// Default cap on `n^3 * |S|` for the walk-count and character-residual
/// checks inside `verify`.
pub const WALK_BUDGET_DEFAULT: u64 = 2_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "queen-spectra",
    version,
    about = "Adjacency spectrum of the toroidal 3D queen graph on (Z_n)^3"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Cap on n^3 for full frequency enumeration.
    #[arg(long, global = true, env = "QUEEN_SPECTRA_BUDGET")]
    pub budget: Option<u64>,

    /// Cap on the vertex count of an explicitly built graph.
    #[arg(long, global = true)]
    pub oracle_budget: Option<u64>,

    /// Worker threads (defaults to the rayon default). Does not affect output.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum table(s) for one modulus.
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Run the full verification suite for one modulus.
    Verify {
        #[arg(long)]
        n: u32,
        /// Seed for the random character-residual sample.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on n^3 * |S| for the walk-count and residual checks.
        #[arg(long, default_value_t = WALK_BUDGET_DEFAULT)]
        walk_budget: u64,
    },
    /// Direction-pair orbits, their kernel lines and the prototype lines.
    Orbits {
        #[arg(long)]
        n: u32,
    },
    /// Enumerated mu histograms over an inclusive range of moduli.
    Scan {
        /// Inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        range: NRange,
    },
    /// Export the edge list of the graph.
    Graph {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Formula,
    #[value(alias = "enumeration")]
    Enumerate,
    Both,
}

impl MethodArg {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodArg::Formula => "formula",
            MethodArg::Enumerate => "enumerate",
            MethodArg::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a range like 5..8, got {s:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let start: u32 = a.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let end: u32 = b.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if start == 0 || end < start {
        return Err(format!("range must be nonempty with start >= 1, got {s:?}"));
    }
    Ok(NRange { start, end })
}

/// Resolved settings shared by all subcommands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub budget: Budget,
    pub oracle_budget: Budget,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, CliError> {
        let budget = match cli.budget {
            Some(b) => Budget::new(b)?,
            None => Budget::ENUMERATION_DEFAULT,
        };
        let oracle_budget = match cli.oracle_budget {
            Some(b) => Budget::new(b)?,
            None => Budget::ORACLE_DEFAULT,
        };
        if cli.threads == Some(0) {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        Ok(RunConfig {
            format: cli.format,
            out: cli.out.clone(),
            budget,
            oracle_budget,
            threads: cli.threads,
        })
    }
}

pub fn modulus(n: u32) -> Result<Modulus, CliError> {
    Ok(Modulus::new(n)?)
}
