use std::collections::BTreeSet;
use std::io::{self, Write};

use queen_spectra::orbits::{listed_pairs, validate_pair_kernel, LISTED_PAIR_KERNELS};
use queen_spectra::{
    pair_orbits, prototype_lines, solve_pair_kernel, Budget, DirectionPair, Line, LineFamily,
    Modulus,
};
use serde::Serialize;

use super::emit;
use crate::cli::{modulus, RunConfig};
use crate::error::CliError;
use crate::report::{
    csv_field, write_checks_text, Check, Envelope, Payload, RegimeFlag, Status,
};

/// Number of pair orbits the verification suite expects.
pub const EXPECTED_PAIR_ORBITS: usize = 14;

#[derive(Debug, Clone, Serialize)]
pub struct ListedRow {
    pub pair: DirectionPair,
    /// Computed for the requested `n`.
    pub kernel: Line,
    pub listed_kernel: [i64; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitEntry {
    pub representative: DirectionPair,
    pub size: usize,
    pub kernel: Line,
    pub members: Vec<DirectionPair>,
    /// Listed table rows whose pair falls in this orbit.
    pub listed: Vec<ListedRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitsPayload {
    pub n: Modulus,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitEntry>,
    pub lines: Vec<Line>,
    pub checks: Vec<Check>,
}

impl Payload for OrbitsPayload {
    fn statuses(&self) -> Vec<Status> {
        self.checks.iter().map(|c| c.status).collect()
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "record,id,size,pair,generator,family")?;
        for (i, o) in self.orbits.iter().enumerate() {
            writeln!(
                out,
                "orbit,{},{},{},{},{}",
                i,
                o.size,
                csv_field(&o.representative.to_string()),
                csv_field(&o.kernel.to_string()),
                o.kernel.family
            )?;
        }
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(out, "line,{},{},,{},{}", i, self.n, csv_field(&l.to_string()), l.family)?;
        }
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "pair orbits ({}):", self.orbit_count)?;
        for (i, o) in self.orbits.iter().enumerate() {
            let listed: Vec<String> = o.listed.iter().map(|r| r.pair.to_string()).collect();
            writeln!(
                out,
                "  {:>2}  size {:>2}  {:<22} kernel {:<14} {:<14}  listed: {}",
                i,
                o.size,
                o.representative.to_string(),
                o.kernel.to_string(),
                o.kernel.family.as_str(),
                if listed.is_empty() { "-".to_owned() } else { listed.join(" ") }
            )?;
        }
        writeln!(out)?;
        writeln!(out, "prototype lines ({}):", self.lines.len())?;
        for family in LineFamily::ALL {
            let gens: Vec<String> = self
                .lines
                .iter()
                .filter(|l| l.family == family)
                .map(|l| l.to_string())
                .collect();
            writeln!(out, "  {:<14} ({:>2}) {}", family.as_str(), gens.len(), gens.join(" "))?;
        }
        writeln!(out)?;
        write_checks_text(out, &self.checks)
    }
}

/// Orbit and kernel report for one generic modulus, plus the structural checks.
pub fn orbit_report(n: Modulus, budget: Budget) -> Result<OrbitsPayload, CliError> {
    n.require_generic()?;
    let orbits = pair_orbits();
    let lines = prototype_lines();
    let line_set: BTreeSet<Line> = lines.iter().copied().collect();
    let listed = listed_pairs();

    let mut entries = Vec::with_capacity(orbits.len());
    let mut validated = 0usize;
    for o in &orbits {
        let (u, v) = o.representative.directions();
        let kernel = solve_pair_kernel(&u, &v, n)?;
        if validate_pair_kernel(&u, &v, n, budget)? {
            validated += 1;
        }
        let rows = listed
            .iter()
            .zip(LISTED_PAIR_KERNELS.iter())
            .filter(|(p, _)| o.members.contains(p))
            .map(|(p, (_, _, w))| {
                let (u, v) = p.directions();
                Ok(ListedRow {
                    pair: *p,
                    kernel: solve_pair_kernel(&u, &v, n)?,
                    listed_kernel: *w,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        entries.push(OrbitEntry {
            representative: o.representative,
            size: o.members.len(),
            kernel,
            members: o.members.clone(),
            listed: rows,
        });
    }

    let all_pairs = DirectionPair::all();
    let kernels = all_pairs
        .iter()
        .map(|p| {
            let (u, v) = p.directions();
            solve_pair_kernel(&u, &v, n)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let in_lines = kernels.iter().filter(|k| line_set.contains(k)).count();
    let hit: BTreeSet<Line> = kernels.iter().copied().collect();
    let covered: BTreeSet<DirectionPair> =
        orbits.iter().flat_map(|o| o.members.iter().copied()).collect();
    let member_total: usize = orbits.iter().map(|o| o.members.len()).sum();
    let family_counts = |ls: &[Line]| {
        LineFamily::ALL
            .map(|f| ls.iter().filter(|l| l.family == f).count().to_string())
            .join(",")
    };
    let listed_ok = LISTED_PAIR_KERNELS
        .iter()
        .zip(&listed)
        .filter(|((_, _, w), p)| {
            let (u, v) = p.directions();
            Line::from_vector(*w) == solve_pair_kernel(&u, &v, n).ok()
        })
        .count();

    let checks = vec![
        Check::equal("pair_orbit_count", orbits.len(), EXPECTED_PAIR_ORBITS),
        Check::with_status(
            "pair_orbit_partition",
            member_total == all_pairs.len() && covered.len() == all_pairs.len(),
            format!("{member_total} members, {} distinct", covered.len()),
            format!("{} pairs", all_pairs.len()),
        ),
        Check::equal("pair_kernels_in_prototype_lines", in_lines, all_pairs.len()),
        Check::equal("prototype_lines_hit_by_kernels", hit.len(), lines.len()),
        Check::equal("prototype_family_counts", family_counts(&lines), "3,6,4,12"),
        Check::equal("kernel_enumeration_matches", validated, orbits.len()),
        Check::equal("listed_kernels_match", listed_ok, LISTED_PAIR_KERNELS.len()),
    ];

    Ok(OrbitsPayload {
        n,
        orbit_count: orbits.len(),
        orbits: entries,
        lines,
        checks,
    })
}

pub fn run(n: u32, config: &RunConfig) -> Result<bool, CliError> {
    let n = modulus(n)?;
    let payload = orbit_report(n, config.budget)?;
    let env = Envelope::new(
        format!("orbits --n {n}"),
        vec![RegimeFlag {
            n: n.get(),
            regime: n.regime(),
        }],
        payload,
    );
    emit(&env, config)
}
