use serde::Serialize;

use crate::error::{Error, Result};

/// Upper bound on the work an enumeration or oracle routine may take on,
/// measured in points (or vertices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Budget(u64);

impl Budget {
    /// Default cap on `n^3` for full frequency enumeration.
    pub const ENUMERATION_DEFAULT: Budget = Budget(200_000_000);
    /// Default cap on the vertex count of an explicitly built graph.
    pub const ORACLE_DEFAULT: Budget = Budget(100_000);

    pub fn new(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidBudget);
        }
        Ok(Budget(limit))
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    pub fn check(self, what: &'static str, required: u64) -> Result<()> {
        if required > self.0 {
            Err(Error::BudgetExceeded {
                what,
                required,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::ENUMERATION_DEFAULT
    }
}
