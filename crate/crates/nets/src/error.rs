use thiserror::Error;

pub type Result<T> = std::result::Result<T, NetError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetError {
    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("malformed matrix: {0}")]
    Malformed(String),

    #[error("matrix is not a generalized Hadamard matrix")]
    NotGeneralizedHadamard,

    #[error("code does not have symmetric-net parameters: {0}")]
    NotNetType(String),

    #[error("words do not split into classes of mutually opposite words: {0}")]
    NoWordPartition(String),

    #[error("no arrangement of the incidence matrix into permutation blocks: {0}")]
    NoArrangement(String),

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Core(#[from] qary_core::Error),
}
