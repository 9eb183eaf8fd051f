//! The braid action on label vectors, labelling counts and the birack
//! polynomial with its refined two-variable form.

mod action;
mod count;
mod oracle;
mod polynomial;

use thiserror::Error;

use crate::algebra::{AlgebraError, Tag};

pub use action::{braid_action, StrandAssignment, STRAND_ASSIGNMENT};
pub use count::{count_labellings, count_labellings_with, count_refined, labellings, Labelling};
pub use oracle::{oracle_count, oracle_count_with};
pub use polynomial::{
    birack_polynomial, birack_polynomial_with, refined_polynomial, refined_polynomial_with, BirackPolynomial,
    PolynomialError,
};

/// Default cap on label vectors evaluated by one count.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("label vector has length {got}, braid has {strands} strands")]
    VectorLength { got: usize, strands: usize },
    #[error(
        "refusing to enumerate {size}^{strands} = {required} label vectors: budget is {budget}, \
         pass a budget of at least {required}"
    )]
    Budget { size: usize, strands: usize, required: u128, budget: u64 },
    #[error("the birack polynomial needs a classical braid, found a `{0}` crossing")]
    UnsupportedTheory(Tag),
}

/// Knobs shared by every counting entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Maximum number of label vectors a single count may evaluate.
    pub budget: u64,
    pub assignment: StrandAssignment,
}

impl Default for Options {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, assignment: STRAND_ASSIGNMENT }
    }
}

impl Options {
    pub fn with_budget(self, budget: u64) -> Self {
        Self { budget, ..self }
    }

    pub fn with_assignment(self, assignment: StrandAssignment) -> Self {
        Self { assignment, ..self }
    }

    pub(crate) fn check(&self, size: usize, strands: usize) -> Result<(), InvariantError> {
        let required = u32::try_from(strands).ok().and_then(|r| (size as u128).checked_pow(r)).unwrap_or(u128::MAX);
        if required > self.budget as u128 {
            return Err(InvariantError::Budget { size, strands, required, budget: self.budget });
        }
        Ok(())
    }
}
