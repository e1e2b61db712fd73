use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("word length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("symbol {symbol} out of range for alphabet of size {q}")]
    SymbolOutOfRange { symbol: usize, q: usize },

    #[error("duplicate word {0}")]
    DuplicateWord(String),

    #[error("minimum distance undefined for a code of size {0}")]
    UndefinedDistance(usize),

    #[error("equivalence map does not fit a code with q={q}, n={n}")]
    DimensionMismatch { q: usize, n: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("code too large for canonical search ({rows} rows, {cols} columns, q={q})")]
    TooLarge { rows: usize, cols: usize, q: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Failures while reading the text code format. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {reason}")]
    Header { line: usize, reason: String },

    #[error("line {line}: symbol {symbol} out of range 0..{q}")]
    SymbolRange { line: usize, symbol: i64, q: usize },

    #[error("line {line}: expected {expected} symbols, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {line}: not an integer: {token:?}")]
    Token { line: usize, token: String },

    #[error("line {line}: duplicate word")]
    Duplicate { line: usize },

    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },

    #[error("malformed class list: {0}")]
    ClassList(String),
}
