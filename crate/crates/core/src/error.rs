use thiserror::Error;

use crate::arith::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero is outside the domain of {0}")]
    Zero(&'static str),

    #[error("lesson must start at an odd integer >= 3, got {0}")]
    InvalidStart(Natural),

    #[error("no repeated state for sqrt({n}) within {max_states} states")]
    BudgetExceeded { n: Natural, max_states: usize },

    #[error("case {n} needs {steps} steps, over the per-case budget of {budget}")]
    CaseBudgetExceeded { n: Natural, steps: usize, budget: usize },

    #[error("report and trace disagree: {0}")]
    MismatchedTrace(String),

    #[error("invalid natural number {0:?}: expected decimal digits")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
