use thiserror::Error;

/// Failures raised by the exact algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular input: matrix is not invertible")]
    Singular,
    #[error("not unipotent: (u - I)^n is nonzero")]
    NotUnipotent,
    #[error("not defined over the base field: descended dimension {descended} differs from {expected}")]
    NotDefinedOverBase { descended: usize, expected: usize },
    #[error("not split: dim t ({semisimple}) + dim u ({nilpotent}) != dim h ({total})")]
    NotSplit {
        semisimple: usize,
        nilpotent: usize,
        total: usize,
    },
    #[error("Cartan subalgebra search exhausted after {0} trials")]
    SearchExhausted(usize),
    #[error("resource limit: field degree {degree} exceeds the cap {cap}")]
    FieldDegreeLimit { degree: usize, cap: usize },
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("numerical certification failed: {0}")]
    Numerics(String),
}

impl Error {
    /// Resource and budget failures, as opposed to bad input or broken invariants.
    pub fn is_exhaustion(&self) -> bool {
        matches!(
            self,
            Error::FieldDegreeLimit { .. } | Error::BudgetExhausted(_) | Error::SearchExhausted(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
