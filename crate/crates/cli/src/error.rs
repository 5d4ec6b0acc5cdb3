use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] queen_spectra::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 check failed or internal error, 2 bad regime or arguments, 3 budget.
    pub fn exit_code(&self) -> u8 {
        use queen_spectra::Error as E;
        match self {
            CliError::Core(E::BudgetExceeded { .. }) => 3,
            CliError::Core(
                E::NonGenericModulus { .. }
                | E::InvalidModulus(_)
                | E::InvalidBudget
                | E::UnsupportedMuValue { .. }
                | E::UnsupportedWalkLength(_),
            ) => 2,
            CliError::Usage(_) => 2,
            CliError::Core(_) | CliError::Io(_) => 1,
        }
    }
}
