use std::fs::File;
use std::io::{self, BufWriter, Write};

use queen_spectra::{build_adjacency, StructureReport};
use serde::Serialize;

use crate::cli::{modulus, RunConfig};
use crate::error::CliError;
use crate::report::{render, write_checks_csv, write_checks_text, Check, Envelope, Payload, RegimeFlag, Status};

#[derive(Debug, Clone, Serialize)]
pub struct GraphPayload {
    pub structure: StructureReport,
    pub edge_list: String,
    pub checks: Vec<Check>,
}

impl Payload for GraphPayload {
    fn statuses(&self) -> Vec<Status> {
        self.checks.iter().map(|c| c.status).collect()
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "n,check,status,lhs,rhs,detail")?;
        write_checks_csv(out, self.structure.n.get(), &self.checks)
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        let s = &self.structure;
        writeln!(out, "vertices: {}", s.vertices)?;
        writeln!(out, "degree:   {}", s.degree)?;
        writeln!(out, "edges:    {}", s.edges)?;
        writeln!(out, "edge list: {}", self.edge_list)?;
        write_checks_text(out, &self.checks)
    }
}

/// Writes the edge list to `--out` (report on stdout), or to stdout (report
/// on stderr) when no path is given.
pub fn run(n: u32, config: &RunConfig) -> Result<bool, CliError> {
    let n = modulus(n)?;
    let graph = build_adjacency(n, config.oracle_budget)?;
    let structure = graph.check();
    let m = u64::from(n.get());
    let expected_degree = 13 * (m - 1);
    let checks = vec![
        Check::equal("vertices", structure.vertices, n.volume()),
        Check::equal(
            "handshake_edges",
            structure.edges * 2,
            structure.vertices * structure.degree as u64,
        ),
        Check::with_status("symmetric", structure.symmetric, "symmetric", "symmetric"),
        Check::with_status("loop_free", structure.loop_free, "loop_free", "loop_free"),
        if n.is_generic_odd() {
            Check::equal("degree", structure.degree as u64, expected_degree)
        } else {
            Check::skipped(
                "degree",
                format!(
                    "non-generic modulus: degree {} vs 13(n-1) = {expected_degree}",
                    structure.degree
                ),
            )
        },
    ];

    let edge_list = match &config.out {
        Some(path) => {
            graph.write_edge_list(BufWriter::new(File::create(path)?))?;
            path.display().to_string()
        }
        None => {
            graph.write_edge_list(BufWriter::new(io::stdout().lock()))?;
            "<stdout>".to_owned()
        }
    };
    let env = Envelope::new(
        format!("graph --n {n}"),
        vec![RegimeFlag {
            n: n.get(),
            regime: n.regime(),
        }],
        GraphPayload {
            structure,
            edge_list,
            checks,
        },
    );
    match &config.out {
        Some(_) => render(&env, config.format, &mut BufWriter::new(io::stdout().lock()))?,
        None => render(&env, config.format, &mut BufWriter::new(io::stderr().lock()))?,
    }
    Ok(env.passed())
}
