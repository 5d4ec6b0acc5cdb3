//! Acceptance criteria, one line per criterion. Exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic;
use std::process::Command;
use std::time::{Duration, Instant};

use queen_spectra::orbits::{listed_pairs, LISTED_PAIR_KERNELS};
use queen_spectra::{
    build_adjacency, coverage_check, eigenvalue, generator_set, mu, multiplicity_formula,
    pair_orbits, prototype_lines, solve_pair_kernel, spectrum_by_enumeration, spectrum_by_formula,
    verify_identities, Budget, DirectionPair, FrequencyPoint, Line, LineFamily, Modulus,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn m(n: u32) -> Modulus {
    Modulus::new(n).unwrap()
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(f)
}

fn lambda_pairs(rows: &[queen_spectra::SpectrumRow]) -> Vec<(i64, u64)> {
    rows.iter().map(|r| (r.lambda, r.multiplicity)).collect()
}

fn golden_n5() -> Outcome {
    let start = Instant::now();
    let expected = vec![(52, 1), (7, 36), (2, 16), (-3, 48), (-8, 24)];
    let f = spectrum_by_formula(m(5)).map_err(|e| e.to_string())?;
    let e = spectrum_by_enumeration(m(5), Budget::default()).map_err(|e| e.to_string())?;
    ensure!(lambda_pairs(&f.support()) == expected, "formula {:?}", lambda_pairs(&f.support()));
    ensure!(lambda_pairs(&e.rows) == expected, "enumeration {:?}", lambda_pairs(&e.rows));
    ensure!(f.multiplicity_of(0) == 0 && e.multiplicity_of(0) == 0, "mu = 0 present");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("(52,1) (7,36) (2,16) (-3,48) (-8,24), no -13; {elapsed:.2?}"))
}

fn formula_enumeration_equivalence() -> Outcome {
    let moduli = [5u32, 7, 11, 13, 17, 19, 23, 25, 29, 35, 49];
    let start = Instant::now();
    single_threaded(|| -> Outcome {
        for n in moduli {
            let e = spectrum_by_enumeration(m(n), Budget::default()).map_err(|e| e.to_string())?;
            for k in 0..=13u32 {
                let expected = match k {
                    0 | 1 | 2 | 3 | 4 | 13 => multiplicity_formula(k, m(n)).map_err(|e| e.to_string())?,
                    _ => 0,
                };
                ensure!(
                    e.multiplicity_of(k) == expected,
                    "n = {n}, mu = {k}: enumerated {} vs formula {expected}",
                    e.multiplicity_of(k)
                );
            }
        }
        Ok(String::new())
    })?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{} moduli incl. 25, 35, 49 exact; {elapsed:.2?} single-threaded", moduli.len()))
}

fn global_identities() -> Outcome {
    for n in 1..=30u32 {
        let t = spectrum_by_enumeration(m(n), Budget::default()).map_err(|e| e.to_string())?;
        let r = verify_identities(&t);
        for name in ["sum_multiplicity", "sum_mu_multiplicity"] {
            let c = r.get(name).ok_or(format!("missing {name}"))?;
            ensure!(c.pass, "n = {n}: {name} {} vs {}", c.lhs, c.rhs);
        }
        let nn = u64::from(n);
        ensure!(t.total_multiplicity() == nn * nn * nn, "n = {n}: total");
    }
    Ok("sum M = n^3 and sum mu*M = 13 n^2 for n = 1..30 (incl. 4, 6, 9, 12)".into())
}

fn moment_oracle() -> Outcome {
    let start = Instant::now();
    let mut shown = Vec::new();
    for n in [5u32, 7] {
        let graph = build_adjacency(m(n), Budget::ORACLE_DEFAULT).map_err(|e| e.to_string())?;
        let table = spectrum_by_formula(m(n)).map_err(|e| e.to_string())?;
        let traces = graph.trace_powers(4);
        for k in 1..=4u32 {
            let (lhs, rhs) = (traces[k as usize - 1], table.moment(k));
            ensure!(lhs == rhs, "n = {n}, k = {k}: trace {lhs} vs moment {rhs}");
        }
        shown.push(format!("n={n}: {traces:?}"));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{}; {elapsed:.2?}", shown.join(", ")))
}

fn character_residuals() -> Outcome {
    use rand::{Rng, SeedableRng};
    let mut worst_overall: f64 = 0.0;
    for n in [5u32, 7] {
        let n = m(n);
        let graph = build_adjacency(n, Budget::ORACLE_DEFAULT).map_err(|e| e.to_string())?;
        let tol = 1e-8 * 13.0 * f64::from(n.get() - 1);
        let mut sample: Vec<FrequencyPoint> = FrequencyPoint::all(n).filter(|a| mu(a, n) >= 2).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let side = n.get();
        sample.extend((0..50).map(|_| {
            FrequencyPoint::from_residues(
                [rng.random_range(0..side), rng.random_range(0..side), rng.random_range(0..side)],
                n,
            )
        }));
        for a in &sample {
            let lambda = eigenvalue(a, n).map_err(|e| e.to_string())?;
            let r = graph.character_residual(a, lambda);
            ensure!(r < tol, "n = {n}, a = {a}: residual {r:e} >= {tol:e}");
            worst_overall = worst_overall.max(r);
        }
    }
    Ok(format!("max residual {worst_overall:e} < 1e-8*13(n-1)"))
}

fn orbit_structure() -> Outcome {
    let orbits = pair_orbits();
    let members: usize = orbits.iter().map(|o| o.members.len()).sum();
    let distinct: BTreeSet<DirectionPair> =
        orbits.iter().flat_map(|o| o.members.iter().copied()).collect();
    ensure!(members == 78 && distinct.len() == 78, "orbits cover {members} / {} pairs", distinct.len());

    let lines = prototype_lines();
    let line_set: BTreeSet<Line> = lines.iter().copied().collect();
    let counts = LineFamily::ALL.map(|f| lines.iter().filter(|l| l.family == f).count());
    ensure!(counts == [3, 6, 4, 12], "family counts {counts:?}");
    for p in DirectionPair::all() {
        let (u, v) = p.directions();
        let k = solve_pair_kernel(&u, &v, m(5)).map_err(|e| e.to_string())?;
        ensure!(line_set.contains(&k), "kernel of {p} is {k}, not a prototype line");
    }
    for ((_, _, w), p) in LISTED_PAIR_KERNELS.iter().zip(listed_pairs()) {
        let (u, v) = p.directions();
        let k = solve_pair_kernel(&u, &v, m(5)).map_err(|e| e.to_string())?;
        ensure!(Line::from_vector(*w) == Some(k), "listed kernel of {p}: {w:?} vs {k}");
    }
    ensure!(
        orbits.len() == 14,
        "pair orbit count {} vs 14 (partition of 78, kernels in 25 lines, family counts 3,6,4,12 all hold)",
        orbits.len()
    );
    Ok("14 orbits over 78 pairs; kernels among 25 lines; families (3,6,4,12)".into())
}

fn coverage() -> Outcome {
    for n in [5u32, 7, 11, 25] {
        let r = coverage_check(m(n), Budget::default()).map_err(|e| e.to_string())?;
        ensure!(r.pass(), "n = {n}: {r:?}");
        let by_family: Vec<u32> = r.families.iter().flat_map(|f| f.observed_mu.clone()).collect();
        ensure!(by_family == [4, 4, 3, 2], "n = {n}: family mu {by_family:?}");
        let sum = multiplicity_formula(4, m(n)).unwrap()
            + multiplicity_formula(3, m(n)).unwrap()
            + multiplicity_formula(2, m(n)).unwrap();
        ensure!(r.union_size == 25 * u64::from(n - 1), "n = {n}: union {}", r.union_size);
        ensure!(sum == r.union_size, "n = {n}: M4+M3+M2 = {sum} vs {}", r.union_size);
    }
    Ok("n = 5, 7, 11, 25: union = 25(n-1), disjoint, family mu (4,4,3,2)".into())
}

fn extremes() -> Outcome {
    for n in [17u32, 19, 23] {
        let t = spectrum_by_enumeration(m(n), Budget::default()).map_err(|e| e.to_string())?;
        ensure!(t.multiplicity_of(0) > 0, "n = {n}: M_0 = 0");
        ensure!(t.min_eigenvalue() == Some(-13), "n = {n}: min {:?}", t.min_eigenvalue());
        ensure!(multiplicity_formula(0, m(n)).unwrap() == t.multiplicity_of(0), "n = {n}: M_0 formula");
    }
    for n in [5u32, 7] {
        let t = spectrum_by_enumeration(m(n), Budget::default()).map_err(|e| e.to_string())?;
        ensure!(t.multiplicity_of(0) == 0, "n = {n}: M_0 = {}", t.multiplicity_of(0));
        ensure!(multiplicity_formula(0, m(n)).unwrap() == 0, "n = {n}: formula M_0");
    }
    for n in [5u32, 7, 11, 13, 17, 19, 23] {
        let n = m(n);
        let degree = 13 * i64::from(n.get() - 1);
        let lambda0 = eigenvalue(&FrequencyPoint::ZERO, n).map_err(|e| e.to_string())?;
        ensure!(lambda0 == degree, "n = {n}: lambda(0) = {lambda0}");
        ensure!(generator_set(n).len() as i64 == degree, "n = {n}: |S|");
        if n.get() <= 11 {
            let s = build_adjacency(n, Budget::ORACLE_DEFAULT).map_err(|e| e.to_string())?.check();
            ensure!(s.pass() && s.degree as i64 == degree, "n = {n}: {s:?}");
        }
    }
    Ok("M_0 > 0 and min lambda = -13 at 17, 19, 23; M_0 = 0 at 5, 7; lambda(0) = 13(n-1) = degree".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_queen-spectra");
    let run = |extra: &[&str]| -> Result<Vec<u8>, String> {
        let out = Command::new(bin)
            .args(["verify", "--n", "5"])
            .args(extra)
            .env_remove("QUEEN_SPECTRA_BUDGET")
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(!out.stdout.is_empty(), "empty report: {}", String::from_utf8_lossy(&out.stderr));
        Ok(out.stdout)
    };
    let first = run(&[])?;
    let variants: [&[&str]; 4] = [&[], &["--threads", "1"], &["--threads", "4"], &["--threads", "7"]];
    for v in variants {
        ensure!(run(v)? == first, "report differs with {v:?}");
    }
    let json = run(&["--format", "json"])?;
    ensure!(run(&["--format", "json", "--threads", "3"])? == json, "json report differs across workers");
    Ok(format!("verify --n 5 byte-identical across 6 runs ({} bytes)", first.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden n=5 table", golden_n5),
        ("formula-enumeration equivalence", formula_enumeration_equivalence),
        ("global identities", global_identities),
        ("moment-level graph oracle", moment_oracle),
        ("character residuals", character_residuals),
        ("orbit structure", orbit_structure),
        ("coverage", coverage),
        ("extremes", extremes),
        ("determinism", determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name}: {detail}", i + 1),
            Err(reason) => {
                failures += 1;
                println!("[FAIL] {}. {name}: {reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
