use std::io::{self, Write};

use queen_spectra::{
    generator_set, mu_histogram, spectrum::table_from_histogram, spectrum_by_formula, Modulus,
    Regime,
};
use serde::Serialize;

use super::{emit, support_text};
use crate::cli::{modulus, NRange, RunConfig};
use crate::cmd::spectrum::TableReport;
use crate::error::CliError;
use crate::report::{write_checks_text, Check, Envelope, Payload, RegimeFlag, Status};

#[derive(Debug, Clone, Serialize)]
pub struct HistogramBin {
    pub mu: u32,
    pub count: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanEntry {
    pub n: Modulus,
    pub regime: Regime,
    pub histogram: Vec<HistogramBin>,
    pub observed_mu: Vec<u32>,
    pub generator_set_size: usize,
    pub generator_set_expected: usize,
    pub table: TableReport,
    /// Only for generic moduli; no formula claim is made otherwise.
    pub formula_match: Option<Check>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct ScanPayload {
    pub entries: Vec<ScanEntry>,
}

impl Payload for ScanPayload {
    fn statuses(&self) -> Vec<Status> {
        self.entries
            .iter()
            .flat_map(|e| {
                e.table
                    .identities
                    .iter()
                    .map(|c| Status::from_bool(c.pass))
                    .chain(e.formula_match.iter().map(|c| c.status))
            })
            .collect()
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "n,regime,mu,lambda,multiplicity,generator_set_size")?;
        for e in &self.entries {
            for r in &e.table.rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    e.n,
                    e.regime.as_str(),
                    r.mu,
                    r.lambda,
                    r.multiplicity,
                    e.generator_set_size
                )?;
            }
        }
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for e in &self.entries {
            e.table.write_text(out)?;
            let observed: Vec<String> = e.observed_mu.iter().map(u32::to_string).collect();
            writeln!(out, "  observed mu: {{{}}}", observed.join(", "))?;
            writeln!(
                out,
                "  |S| = {} (13(n-1) = {})",
                e.generator_set_size, e.generator_set_expected
            )?;
            match &e.formula_match {
                Some(c) => write_checks_text(out, std::slice::from_ref(c))?,
                None => writeln!(out, "  non-generic modulus: exploratory histogram, no formula claims")?,
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

fn scan_one(n: Modulus, config: &RunConfig) -> Result<ScanEntry, CliError> {
    let hist = mu_histogram(n, config.budget)?;
    let table = table_from_histogram(n, &hist);
    let s = generator_set(n);
    let formula_match = if n.is_generic_odd() {
        let f = spectrum_by_formula(n)?;
        Some(Check::with_status(
            "formula_equals_enumeration",
            f.same_spectrum(&table),
            support_text(&table),
            support_text(&f),
        ))
    } else {
        None
    };
    Ok(ScanEntry {
        n,
        regime: n.regime(),
        histogram: hist
            .observed()
            .into_iter()
            .map(|mu| HistogramBin {
                mu,
                count: hist.count(mu),
            })
            .collect(),
        observed_mu: hist.observed(),
        generator_set_size: s.len(),
        generator_set_expected: s.expected_len(),
        table: TableReport::from(&table),
        formula_match,
    })
}

pub fn run(range: NRange, config: &RunConfig) -> Result<bool, CliError> {
    let entries = range
        .iter()
        .map(|n| scan_one(modulus(n)?, config))
        .collect::<Result<Vec<_>, _>>()?;
    let regimes = entries
        .iter()
        .map(|e| RegimeFlag {
            n: e.n.get(),
            regime: e.regime,
        })
        .collect();
    let env = Envelope::new(
        format!("scan --range {}..{}", range.start, range.end),
        regimes,
        ScanPayload { entries },
    );
    emit(&env, config)
}
