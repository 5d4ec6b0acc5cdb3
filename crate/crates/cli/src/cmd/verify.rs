use std::io::{self, Write};

use queen_spectra::{
    build_adjacency, coverage_check, eigenvalue, generator_set, geometric_sum_check, mu,
    spectrum_by_enumeration, spectrum_by_formula, verify_identities, FrequencyPoint, LineFamily,
    Modulus, Regime, SpectrumTable,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{emit, orbits::orbit_report, support_text};
use crate::cli::{modulus, RunConfig};
use crate::error::CliError;
use crate::report::{
    write_checks_csv, write_checks_text, Check, Envelope, Payload, RegimeFlag, Status,
};

/// Random frequencies added to the residual sample on top of every point
/// with `mu >= 2`.
pub const RESIDUAL_SAMPLE: usize = 50;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyPayload {
    pub n: Modulus,
    pub regime: Regime,
    pub checks: Vec<Check>,
}

impl Payload for VerifyPayload {
    fn statuses(&self) -> Vec<Status> {
        self.checks.iter().map(|c| c.status).collect()
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "n,check,status,lhs,rhs,detail")?;
        write_checks_csv(out, self.n.get(), &self.checks)
    }

    fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        write_checks_text(out, &self.checks)
    }
}

fn non_generic(name: &str) -> Check {
    Check::skipped(name, "non-generic modulus")
}

/// Frequencies for the residual check: all points with `mu >= 2`, then up to
/// [`RESIDUAL_SAMPLE`] distinct others drawn with the given seed.
fn residual_sample(n: Modulus, seed: u64) -> (Vec<FrequencyPoint>, usize) {
    let (mut high, rest): (Vec<FrequencyPoint>, Vec<FrequencyPoint>) =
        FrequencyPoint::all(n).partition(|a| mu(a, n) >= 2);
    let high_count = high.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = RESIDUAL_SAMPLE.min(rest.len());
    let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, rest.len(), k).into_vec();
    picked.sort_unstable();
    high.extend(picked.into_iter().map(|i| rest[i]));
    (high, high_count)
}

fn oracle_checks(
    n: Modulus,
    formula: Option<&SpectrumTable>,
    seed: u64,
    walk_budget: u64,
    config: &RunConfig,
) -> Result<Vec<Check>, CliError> {
    let names = ["adjacency_structure", "trace_k1", "trace_k2", "trace_k3", "trace_k4", "character_residual"];
    let s_len = generator_set(n).len() as u64;
    let work = n.volume() * s_len;
    if work > walk_budget || n.volume() > config.oracle_budget.limit() {
        let reason = format!(
            "n^3*|S| = {work} (walk budget {walk_budget}), n^3 = {} (oracle budget {})",
            n.volume(),
            config.oracle_budget.limit()
        );
        return Ok(names.iter().map(|name| Check::skipped(*name, reason.clone())).collect());
    }

    let graph = build_adjacency(n, config.oracle_budget)?;
    let structure = graph.check();
    let mut checks = vec![Check::with_status(
        "adjacency_structure",
        structure.pass(),
        format!(
            "degree {}, symmetric {}, loop_free {}, regular {}",
            structure.degree, structure.symmetric, structure.loop_free, structure.regular
        ),
        format!("degree {s_len}, symmetric true, loop_free true, regular true"),
    )];

    let Some(formula) = formula else {
        checks.extend(names[1..].iter().map(|name| non_generic(name)));
        return Ok(checks);
    };

    for (k, trace) in (1u32..).zip(graph.trace_powers(4)) {
        checks.push(
            Check::equal(format!("trace_k{k}"), trace, formula.moment(k))
                .detail("closed walks on the graph vs sum lambda^k * M"),
        );
    }

    let (sample, high_count) = residual_sample(n, seed);
    let mut worst = 0.0f64;
    for a in &sample {
        worst = worst.max(graph.character_residual(a, eigenvalue(a, n)?));
    }
    let tol = 1e-8 * s_len as f64;
    checks.push(
        Check::with_status("character_residual", worst < tol, worst, tol).detail(format!(
            "{} characters: {} with mu >= 2, {} sampled",
            sample.len(),
            high_count,
            sample.len() - high_count
        )),
    );
    Ok(checks)
}

pub fn verify_checks(
    n: Modulus,
    seed: u64,
    walk_budget: u64,
    config: &RunConfig,
) -> Result<Vec<Check>, CliError> {
    let enumerated = spectrum_by_enumeration(n, config.budget)?;
    let generic = n.is_generic_odd();
    let formula = if generic {
        Some(spectrum_by_formula(n)?)
    } else {
        None
    };
    let mut checks = Vec::new();

    match &formula {
        Some(f) => checks.push(Check::with_status(
            "formula_equals_enumeration",
            f.same_spectrum(&enumerated),
            support_text(&enumerated),
            support_text(f),
        )),
        None => checks.push(non_generic("formula_equals_enumeration")),
    }
    for c in verify_identities(&enumerated).checks {
        checks.push(Check::with_status(format!("identity.{}", c.name), c.pass, c.lhs, c.rhs));
    }

    let s = generator_set(n);
    checks.push(Check::with_status(
        "generator_set_symmetric",
        s.closed_under_negation() && !s.contains_zero(),
        format!("|S| = {}, S = -S: {}, 0 in S: {}", s.len(), s.closed_under_negation(), s.contains_zero()),
        "S = -S: true, 0 in S: false",
    ));
    if let Some(f) = &formula {
        checks.push(Check::equal("generator_set_size", s.len(), s.expected_len()));
        checks.push(
            Check::equal("lambda_zero_equals_degree", eigenvalue(&FrequencyPoint::ZERO, n)?, s.len() as i64)
                .detail("n*mu(0) - 13 vs |S|"),
        );
        checks.push(
            Check::equal(
                "min_eigenvalue",
                enumerated.min_eigenvalue().unwrap_or_default(),
                f.min_eigenvalue().unwrap_or_default(),
            )
            .detail(format!("M_0 = {}", f.multiplicity_of(0))),
        );
    } else {
        checks.push(Check::skipped(
            "generator_set_size",
            format!("non-generic modulus: |S| = {} vs 13(n-1) = {}", s.len(), s.expected_len()),
        ));
        checks.push(non_generic("lambda_zero_equals_degree"));
        checks.push(non_generic("min_eigenvalue"));
    }

    let agreeing = (0..n.get())
        .filter(|&e| geometric_sum_check(e, n).agrees)
        .count();
    checks.push(Check::equal("geometric_sums", agreeing, n.get() as usize));

    checks.extend(oracle_checks(n, formula.as_ref(), seed, walk_budget, config)?);

    if generic {
        let cov = coverage_check(n, config.budget)?;
        let m = u64::from(n.get());
        checks.push(
            Check::with_status("coverage", cov.pass(), cov.union_size, 25 * (m - 1)).detail(format!(
                "mu>=2 points {}, uncovered {}, spurious {}, intersections {}, short lines {}",
                cov.high_mu_points, cov.uncovered, cov.spurious, cov.intersections, cov.short_lines
            )),
        );
        let observed = cov
            .families
            .iter()
            .map(|f| {
                f.observed_mu
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect::<Vec<_>>()
            .join(",");
        let expected = LineFamily::ALL
            .map(|f| f.mu_value().to_string())
            .join(",");
        checks.push(Check::equal("line_family_mu", observed, expected));
        checks.extend(orbit_report(n, config.budget)?.checks);
    } else {
        for name in ["coverage", "line_family_mu", "pair_orbits"] {
            checks.push(non_generic(name));
        }
    }
    Ok(checks)
}

pub fn run(n: u32, seed: u64, walk_budget: u64, config: &RunConfig) -> Result<bool, CliError> {
    let n = modulus(n)?;
    let checks = verify_checks(n, seed, walk_budget, config)?;
    let env = Envelope::new(
        format!("verify --n {n} --seed {seed}"),
        vec![RegimeFlag {
            n: n.get(),
            regime: n.regime(),
        }],
        VerifyPayload {
            n,
            regime: n.regime(),
            checks,
        },
    );
    emit(&env, config)
}
