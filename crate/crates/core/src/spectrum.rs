//! Eigenvalues `lambda = n*mu - 13`, closed-form multiplicities for the
//! generic odd regime, and the enumerated `mu` histogram they are checked
//! against.

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::lattice::{mu, Direction, FrequencyPoint, Modulus, Regime, DIRECTIONS};

/// The `mu` values that occur in the generic odd regime, descending.
pub const GENERIC_MU_VALUES: [u32; 6] = [13, 4, 3, 2, 1, 0];

/// `n * mu(a) - 13`. Only proved in the generic odd regime.
pub fn eigenvalue(a: &FrequencyPoint, n: Modulus) -> Result<i64> {
    n.require_generic()?;
    Ok(lambda_for(mu(a, n), n))
}

/// `n * k - 13`, without any regime check.
#[inline]
pub fn lambda_for(k: u32, n: Modulus) -> i64 {
    i64::from(n.get()) * i64::from(k) - 13
}

/// Closed-form `M_k(n)`, the number of frequencies with `mu = k`.
pub fn multiplicity_formula(k: u32, n: Modulus) -> Result<u64> {
    n.require_generic()?;
    let m = i128::from(n.get());
    let value = match k {
        13 => 1,
        4 => 9 * (m - 1),
        3 => 4 * (m - 1),
        2 => 12 * (m - 1),
        1 => 13 * m * m - 72 * m + 59,
        0 => m * m * m - 13 * m * m + 47 * m - 35,
        _ => return Err(Error::UnsupportedMuValue { k }),
    };
    Ok(u64::try_from(value).expect("multiplicities are nonnegative for n >= 5"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Enumeration => "enumeration",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SpectrumRow {
    pub mu: u32,
    pub lambda: i64,
    pub multiplicity: u64,
}

/// Eigenvalue classes for one modulus, sorted by `mu` descending.
///
/// Formula tables always carry all six generic classes (zero multiplicities
/// included). Enumeration tables only carry observed classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumTable {
    pub n: Modulus,
    pub regime: Regime,
    pub method: Method,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumTable {
    pub fn total_multiplicity(&self) -> u64 {
        self.rows.iter().map(|r| r.multiplicity).sum()
    }

    /// Rows with nonzero multiplicity.
    pub fn support(&self) -> Vec<SpectrumRow> {
        self.rows
            .iter()
            .copied()
            .filter(|r| r.multiplicity > 0)
            .collect()
    }

    /// Equality after dropping zero-multiplicity rows.
    pub fn same_spectrum(&self, other: &SpectrumTable) -> bool {
        self.n == other.n && self.support() == other.support()
    }

    pub fn multiplicity_of(&self, mu_value: u32) -> u64 {
        self.rows
            .iter()
            .find(|r| r.mu == mu_value)
            .map_or(0, |r| r.multiplicity)
    }

    /// `sum lambda^k * M` over the table, exact.
    pub fn moment(&self, k: u32) -> i128 {
        self.rows
            .iter()
            .map(|r| i128::from(r.lambda).pow(k) * i128::from(r.multiplicity))
            .sum()
    }

    pub fn min_eigenvalue(&self) -> Option<i64> {
        self.support().iter().map(|r| r.lambda).min()
    }

    pub fn max_eigenvalue(&self) -> Option<i64> {
        self.support().iter().map(|r| r.lambda).max()
    }
}

/// The six generic classes with their closed-form multiplicities.
pub fn spectrum_by_formula(n: Modulus) -> Result<SpectrumTable> {
    n.require_generic()?;
    let rows = GENERIC_MU_VALUES
        .iter()
        .map(|&k| {
            Ok(SpectrumRow {
                mu: k,
                lambda: lambda_for(k, n),
                multiplicity: multiplicity_formula(k, n)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumTable {
        n,
        regime: Regime::GenericOdd,
        method: Method::Formula,
        rows,
    })
}

/// Histogram of `mu` over every frequency of `(Z_n)^3`; slot `k` holds the
/// number of points with `mu = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MuHistogram(pub [u64; 14]);

impl MuHistogram {
    pub fn count(&self, k: u32) -> u64 {
        self.0.get(k as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `sum_a mu(a)`.
    pub fn weighted_total(&self) -> u64 {
        self.0.iter().enumerate().map(|(k, &c)| k as u64 * c).sum()
    }

    /// Observed `mu` values, descending.
    pub fn observed(&self) -> Vec<u32> {
        (0..14u32).rev().filter(|&k| self.0[k as usize] > 0).collect()
    }

    fn merge(mut self, other: MuHistogram) -> MuHistogram {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
        self
    }
}

/// Counts `mu` over the slab of points with third coordinate `a3`.
///
/// Walks `a1` with running residues `a . u mod n`, so the inner loop does no
/// division.
fn slab_histogram(n: Modulus, a3: u32) -> MuHistogram {
    let m = n.get();
    let step: [u32; 13] = DIRECTIONS.map(|u: Direction| n.reduce(i64::from(u.components()[0])));
    let mut hist = [0u64; 14];
    let mut residues = [0u32; 13];
    for a2 in 0..m {
        let start = FrequencyPoint::from_residues([0, a2, a3], n);
        for (r, u) in residues.iter_mut().zip(DIRECTIONS.iter()) {
            *r = crate::lattice::dot_mod(&start, u, n);
        }
        for _a1 in 0..m {
            let zeros = residues.iter().filter(|&&r| r == 0).count();
            hist[zeros] += 1;
            for (r, &s) in residues.iter_mut().zip(step.iter()) {
                *r += s;
                if *r >= m {
                    *r -= m;
                }
            }
        }
    }
    MuHistogram(hist)
}

/// Full `mu` histogram. Slabs are counted in parallel on the current rayon
/// pool; integer merging makes the result independent of the worker count.
pub fn mu_histogram(n: Modulus, budget: Budget) -> Result<MuHistogram> {
    budget.check("frequency enumeration", n.volume())?;
    Ok((0..n.get())
        .into_par_iter()
        .map(|a3| slab_histogram(n, a3))
        .reduce(|| MuHistogram([0; 14]), MuHistogram::merge))
}

/// Builds a table from a histogram: one row per observed `mu`, with
/// `lambda = n*mu - 13` reported whatever the regime.
pub fn table_from_histogram(n: Modulus, hist: &MuHistogram) -> SpectrumTable {
    let rows = hist
        .observed()
        .into_iter()
        .map(|k| SpectrumRow {
            mu: k,
            lambda: lambda_for(k, n),
            multiplicity: hist.count(k),
        })
        .collect();
    SpectrumTable {
        n,
        regime: n.regime(),
        method: Method::Enumeration,
        rows,
    }
}

pub fn spectrum_by_enumeration(n: Modulus, budget: Budget) -> Result<SpectrumTable> {
    let hist = mu_histogram(n, budget)?;
    Ok(table_from_histogram(n, &hist))
}

/// One identity with both computed sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: i128,
    pub rhs: i128,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(name: &'static str, lhs: i128, rhs: i128) -> Self {
        IdentityCheck {
            name,
            lhs,
            rhs,
            pass: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Global counting identities on a table.
///
/// `sum M = n^3` and `sum mu*M = 13 n^2` hold for every `n`. The eigenvalue
/// sums `sum lambda*M = 0` and `sum lambda^2*M = 13(n-1) n^3` rely on the
/// eigenvalue formula and are only emitted for generic tables.
pub fn verify_identities(table: &SpectrumTable) -> IdentityReport {
    let n = i128::from(table.n.get());
    let sum_m: i128 = table.rows.iter().map(|r| i128::from(r.multiplicity)).sum();
    let sum_mu_m: i128 = table
        .rows
        .iter()
        .map(|r| i128::from(r.mu) * i128::from(r.multiplicity))
        .sum();
    let mut checks = vec![
        IdentityCheck::new("sum_multiplicity", sum_m, n * n * n),
        IdentityCheck::new("sum_mu_multiplicity", sum_mu_m, 13 * n * n),
    ];
    if table.regime == Regime::GenericOdd {
        checks.push(IdentityCheck::new("sum_lambda_multiplicity", table.moment(1), 0));
        checks.push(IdentityCheck::new(
            "sum_lambda_sq_multiplicity",
            table.moment(2),
            13 * (n - 1) * n * n * n,
        ));
    }
    IdentityReport { checks }
}
