//! Report envelope shared by every subcommand, and its JSON / CSV / text
//! renderings. Output depends only on the envelope contents.

use std::fmt;
use std::io::{self, Write};

use queen_spectra::Regime;
use serde::Serialize;

pub const TOOL: &str = "queen-spectra";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One side of a printed comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Side {
    Int(i128),
    Float(f64),
    Text(String),
}

impl From<i128> for Side {
    fn from(v: i128) -> Self {
        Side::Int(v)
    }
}

impl From<u64> for Side {
    fn from(v: u64) -> Self {
        Side::Int(i128::from(v))
    }
}

impl From<i64> for Side {
    fn from(v: i64) -> Self {
        Side::Int(i128::from(v))
    }
}

impl From<usize> for Side {
    fn from(v: usize) -> Self {
        Side::Int(v as i128)
    }
}

impl From<f64> for Side {
    fn from(v: f64) -> Self {
        Side::Float(v)
    }
}

impl From<String> for Side {
    fn from(v: String) -> Self {
        Side::Text(v)
    }
}

impl From<&str> for Side {
    fn from(v: &str) -> Self {
        Side::Text(v.to_owned())
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Int(v) => write!(f, "{v}"),
            Side::Float(v) => write!(f, "{v:e}"),
            Side::Text(v) => f.write_str(v),
        }
    }
}

/// A named check with both computed sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub lhs: Side,
    pub rhs: Side,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    /// Passes iff both sides are equal.
    pub fn equal(name: impl Into<String>, lhs: impl Into<Side>, rhs: impl Into<Side>) -> Check {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        Check {
            name: name.into(),
            status: Status::from_bool(lhs == rhs),
            lhs,
            rhs,
            detail: None,
        }
    }

    pub fn with_status(
        name: impl Into<String>,
        ok: bool,
        lhs: impl Into<Side>,
        rhs: impl Into<Side>,
    ) -> Check {
        Check {
            name: name.into(),
            status: Status::from_bool(ok),
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: None,
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status: Status::Skipped,
            lhs: Side::Text("-".into()),
            rhs: Side::Text("-".into()),
            detail: Some(reason.into()),
        }
    }

    pub fn detail(mut self, detail: impl Into<String>) -> Check {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RegimeFlag {
    pub n: u32,
    pub regime: Regime,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub verdict: Status,
}

impl Summary {
    pub fn from_statuses(statuses: &[Status]) -> Summary {
        let count = |s| statuses.iter().filter(|&&x| x == s).count();
        let failed = count(Status::Fail);
        Summary {
            checks: statuses.len(),
            passed: count(Status::Pass),
            failed,
            skipped: count(Status::Skipped),
            verdict: Status::from_bool(failed == 0),
        }
    }
}

/// Command-specific body of a report.
pub trait Payload: Serialize {
    fn statuses(&self) -> Vec<Status>;
    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()>;
    fn write_text(&self, out: &mut dyn Write) -> io::Result<()>;
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<P> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub regimes: Vec<RegimeFlag>,
    pub payload: P,
    pub summary: Summary,
}

impl<P: Payload> Envelope<P> {
    pub fn new(command: String, regimes: Vec<RegimeFlag>, payload: P) -> Self {
        let summary = Summary::from_statuses(&payload.statuses());
        Envelope {
            tool: TOOL,
            version: VERSION,
            command,
            regimes,
            payload,
            summary,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn render<P: Payload>(env: &Envelope<P>, format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, env)?;
            writeln!(out)?;
        }
        Format::Csv => env.payload.write_csv(out)?,
        Format::Text => {
            writeln!(out, "{} {} :: {}", env.tool, env.version, env.command)?;
            for r in &env.regimes {
                writeln!(out, "n = {} ({})", r.n, r.regime.as_str())?;
            }
            writeln!(out)?;
            env.payload.write_text(out)?;
            let s = &env.summary;
            writeln!(
                out,
                "verdict: {} ({} checks: {} passed, {} failed, {} skipped)",
                s.verdict.as_str(),
                s.checks,
                s.passed,
                s.failed,
                s.skipped
            )?;
        }
    }
    out.flush()
}

/// Quotes a CSV field when needed.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn write_checks_csv(out: &mut dyn Write, n: u32, checks: &[Check]) -> io::Result<()> {
    for c in checks {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            n,
            csv_field(&c.name),
            c.status.as_str(),
            csv_field(&c.lhs.to_string()),
            csv_field(&c.rhs.to_string()),
            csv_field(c.detail.as_deref().unwrap_or(""))
        )?;
    }
    Ok(())
}

pub fn write_checks_text(out: &mut dyn Write, checks: &[Check]) -> io::Result<()> {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in checks {
        write!(
            out,
            "  [{:<7}] {:<width$}  {} vs {}",
            c.status.as_str(),
            c.name,
            c.lhs,
            c.rhs
        )?;
        match &c.detail {
            Some(d) => writeln!(out, "  ({d})")?,
            None => writeln!(out)?,
        }
    }
    Ok(())
}
