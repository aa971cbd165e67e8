use thiserror::Error;

use crate::algebra::Algebra;

/// Errors raised by the algebra, tensor, solver and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra mismatch: {detail}")]
    AlgebraMismatch { detail: String },

    #[error("{0} is not totally ordered")]
    NotTotallyOrdered(Algebra),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("choice-function count {count} exceeds the term budget {budget}")]
    TermBudgetExceeded { count: u128, budget: u64 },

    #[error("{0} does not have a finite carrier")]
    CarrierNotFinite(Algebra),

    #[error("enumeration of {size} candidates exceeds the limit {limit}")]
    EnumerationTooLarge { size: u128, limit: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dims(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }

    pub(crate) fn mismatch(detail: impl Into<String>) -> Self {
        Error::AlgebraMismatch {
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
