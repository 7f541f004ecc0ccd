use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("incomparable totals: {0} vs {1}")]
    IncomparableTotals(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("entry {entry} is already present in the tableau")]
    DuplicateEntry { entry: usize },

    #[error("shift position {a} out of range 1..={max}")]
    ShiftOutOfRange { a: usize, max: usize },

    #[error("invalid window ({i},{j}) for entries {lo}..={hi}")]
    InvalidWindow { i: usize, j: usize, lo: usize, hi: usize },

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("shape mismatch: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("adjacent pair ({i}, {dir}) out of range for n = {n}")]
    PairOutOfRange { i: usize, dir: &'static str, n: usize },

    #[error("not in the domain of the wall-crossing operator {0}")]
    DomainViolation(String),

    #[error("level n = {n} is outside the supported range 1..={limit}")]
    Budget { n: usize, limit: usize },

    #[error("antisymmetry violated: tableaux #{0} and #{1} are mutually related")]
    Antisymmetry(usize, usize),

    #[error("left cells are not the fibres of the recording tableau: {0}")]
    CellIdentification(String),

    #[error("integer overflow in polynomial arithmetic")]
    Overflow,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("relation file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
