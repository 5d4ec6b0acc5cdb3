//! Spectrum of the toroidal 3D queen graph `Cay((Z_n)^3, S)`.
//!
//! Every frequency `a` gives an eigenvalue `n * mu(a) - 13`, where `mu(a)`
//! counts the queen directions orthogonal to `a` mod `n`. For `n` odd, not
//! divisible by 3 and at least 5, the multiplicities are polynomials in `n`.
//!
//! - [`lattice`]: points, directions, `mu`, the signed permutation group.
//! - [`spectrum`]: closed-form and enumerated spectra, counting identities.
//! - [`orbits`]: direction-pair orbits, kernel lines, point classification.
//! - [`oracle`]: the explicit graph, closed-walk traces, character residuals.

pub mod budget;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod orbits;
pub mod spectrum;

pub use budget::Budget;
pub use error::{Error, Result};
pub use lattice::{
    direction_set, dot_mod, mu, signed_permutation_group, Direction, FrequencyPoint, Modulus,
    Regime, SignedPermutation, DIRECTIONS,
};
pub use orbits::{
    classify, coverage_check, pair_orbits, prototype_lines, solve_pair_kernel, Classification,
    CoverageReport, DirectionPair, Line, LineFamily, PairOrbit,
};
pub use oracle::{
    build_adjacency, character_residual, generator_set, geometric_sum_check, trace_power,
    AdjacencyStructure, Character, GeneratorSet, GeometricSum, StructureReport,
};
pub use spectrum::{
    eigenvalue, multiplicity_formula, mu_histogram, spectrum_by_enumeration, spectrum_by_formula,
    verify_identities, IdentityCheck, IdentityReport, Method, MuHistogram, SpectrumRow,
    SpectrumTable,
};
