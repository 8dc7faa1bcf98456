use thiserror::Error;

use crate::instance::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pattern must contain at least one symbol")]
    EmptyPattern,

    #[error("pattern length must be positive")]
    ZeroLengthPattern,

    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(usize),

    #[error("symbol index {index} is out of range for alphabet of size {alphabet_size}")]
    SymbolOutOfRange { index: usize, alphabet_size: usize },

    #[error("instance needs at least one pattern")]
    NoPatterns,

    #[error("pattern {0} appears more than once")]
    DuplicatePattern(usize),

    #[error("expected {expected} symbol names, got {actual}")]
    SymbolNameCount { expected: usize, actual: usize },

    #[error("symbol name {0:?} is duplicated or empty")]
    BadSymbolName(String),

    #[error("closed form does not apply to this pattern set")]
    Inapplicable(ValidationReport),

    #[error("enumeration of {words} words exceeds the guard of {guard}")]
    GuardExceeded { words: String, guard: u64 },

    #[error("dynamic program needs {steps} steps, budget is {budget}")]
    BudgetExceeded { steps: String, budget: u64 },

    #[error("summation produced a negative total {0}")]
    NegativeTotal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
