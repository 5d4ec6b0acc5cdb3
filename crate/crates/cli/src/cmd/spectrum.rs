use std::io::{self, Write};

use queen_spectra::{
    spectrum_by_enumeration, spectrum_by_formula, verify_identities, IdentityCheck, Method, Modulus,
    Regime, SpectrumRow, SpectrumTable,
};
use serde::Serialize;

use super::{emit, support_text};
use crate::cli::{modulus, MethodArg, RunConfig};
use crate::error::CliError;
use crate::report::{write_checks_text, Check, Envelope, Payload, RegimeFlag, Status};

/// A spectrum table with its counting identities, as emitted in reports.
#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub n: Modulus,
    pub regime: Regime,
    pub method: Method,
    pub rows: Vec<SpectrumRow>,
    pub identities: Vec<IdentityCheck>,
}

impl From<&SpectrumTable> for TableReport {
    fn from(t: &SpectrumTable) -> Self {
        TableReport {
            n: t.n,
            regime: t.regime,
            method: t.method,
            rows: t.rows.clone(),
            identities: verify_identities(t).checks,
        }
    }
}

impl TableReport {
    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(
            out,
            "n = {}  regime = {}  method = {}",
            self.n,
            self.regime.as_str(),
            self.method.as_str()
        )?;
        writeln!(out, "  {:>4} | {:>10} | {:>14}", "mu", "lambda", "multiplicity")?;
        writeln!(out, "  {:->4}-+-{:->10}-+-{:->14}", "", "", "")?;
        for r in &self.rows {
            writeln!(out, "  {:>4} | {:>10} | {:>14}", r.mu, r.lambda, r.multiplicity)?;
        }
        writeln!(out, "  identities:")?;
        for c in &self.identities {
            writeln!(
                out,
                "    [{:<4}] {:<28} {} vs {}",
                if c.pass { "pass" } else { "fail" },
                c.name,
                c.lhs,
                c.rhs
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumPayload {
    pub tables: Vec<TableReport>,
    pub comparison: Option<Check>,
}

impl Payload for SpectrumPayload {
    fn statuses(&self) -> Vec<Status> {
        self.tables
            .iter()
            .flat_map(|t| t.identities.iter().map(|c| Status::from_bool(c.pass)))
            .chain(self.comparison.iter().map(|c| c.status))
            .collect()
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        if let [table] = self.tables.as_slice() {
            writeln!(out, "mu,lambda,multiplicity")?;
            for r in &table.rows {
                writeln!(out, "{},{},{}", r.mu, r.lambda, r.multiplicity)?;
            }
        } else {
            writeln!(out, "method,mu,lambda,multiplicity")?;
            for t in &self.tables {
                for r in &t.rows {
                    writeln!(out, "{},{},{},{}", t.method.as_str(), r.mu, r.lambda, r.multiplicity)?;
                }
            }
        }
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        for t in &self.tables {
            t.write_text(out)?;
            writeln!(out)?;
        }
        if let Some(c) = &self.comparison {
            write_checks_text(out, std::slice::from_ref(c))?;
        }
        Ok(())
    }
}

pub fn run(n: u32, method: MethodArg, config: &RunConfig) -> Result<bool, CliError> {
    let n = modulus(n)?;
    let formula = match method {
        MethodArg::Formula | MethodArg::Both => Some(spectrum_by_formula(n)?),
        MethodArg::Enumerate => None,
    };
    let enumerated = match method {
        MethodArg::Enumerate | MethodArg::Both => Some(spectrum_by_enumeration(n, config.budget)?),
        MethodArg::Formula => None,
    };
    let comparison = match (&formula, &enumerated) {
        (Some(f), Some(e)) => Some(Check::with_status(
            "formula_equals_enumeration",
            f.same_spectrum(e),
            support_text(e),
            support_text(f),
        )),
        _ => None,
    };
    let tables = formula
        .iter()
        .chain(enumerated.iter())
        .map(TableReport::from)
        .collect();
    let env = Envelope::new(
        format!("spectrum --n {n} --method {}", method.as_str()),
        vec![RegimeFlag {
            n: n.get(),
            regime: n.regime(),
        }],
        SpectrumPayload { tables, comparison },
    );
    emit(&env, config)
}
