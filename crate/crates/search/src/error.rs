use thiserror::Error;

use qary_core::Code;

pub type Result<T> = std::result::Result<T, SearchError>;

#[derive(Debug, Clone, Error)]
pub enum SearchError {
    #[error("search budget exhausted after {nodes} nodes; {} classes found so far (partial result)", partial.len())]
    BudgetExhausted { nodes: u64, partial: Vec<Code> },

    #[error("time limit of {seconds}s exceeded after {nodes} nodes (partial result)")]
    TimeExhausted { nodes: u64, seconds: u64 },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("extension needs a code of size {expected}, got {found}")]
    WrongSize { expected: usize, found: usize },

    #[error("extension precondition: {0}")]
    NotDeficientRegime(String),

    #[error("column {column} has no unique deficient symbol (counts {counts:?})")]
    NoUniqueDeficientSymbol { column: usize, counts: Vec<usize> },

    #[error("extended code violates the minimum distance")]
    ExtensionInvalid,

    #[error("input code is not an {0} code")]
    InvalidCode(String),

    #[error(transparent)]
    Core(#[from] qary_core::Error),
}
