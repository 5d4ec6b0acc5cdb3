use thiserror::Error;

/// Errors raised by the spectrum, orbit and oracle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(u64),

    #[error("n = {n} is outside the generic odd regime (n odd, 3 does not divide n, n >= 5)")]
    NonGenericModulus { n: u32 },

    #[error("mu = {k} never occurs in the generic odd regime (expected one of 0, 1, 2, 3, 4, 13)")]
    UnsupportedMuValue { k: u32 },

    #[error("{what} needs {required} units but the budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        required: u64,
        budget: u64,
    },

    #[error("closed-walk traces are supported for lengths 1..=4, got {0}")]
    UnsupportedWalkLength(u32),

    #[error("budget must be positive")]
    InvalidBudget,

    #[error("directions {0:?} and {1:?} have a zero cross product")]
    DegenerateKernel([i8; 3], [i8; 3]),

    #[error("classification violated at {point:?} (n = {n}): {reason}")]
    ClassificationViolation {
        point: [u32; 3],
        n: u32,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
