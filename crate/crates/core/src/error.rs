use thiserror::Error;

/// Errors produced by the matrix, determinant and Pell layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a unit of Z[i]")]
    NotAUnit(String),

    #[error("matrix dimension must be at least 1")]
    ZeroDimension,

    #[error("entry count {len} does not match a {rows}x{cols} shape")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("index {index} is outside 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index set must be non-empty and strictly increasing: {0:?}")]
    InvalidIndexSet(Vec<usize>),

    #[error("row selection has {rows} indices but column selection has {cols}")]
    UnequalSelection { rows: usize, cols: usize },

    #[error("selection covers the whole {0}x{0} matrix, leaving an empty minor")]
    FullSelection(usize),

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not tridiagonal")]
    NotTridiagonal,

    #[error("permutation oracle limited to n <= {max}, got n = {n}")]
    TooLargeForOracle { n: usize, max: usize },

    #[error("expansion needs {terms} column subsets, limit is {limit}")]
    ExpansionTooLarge { terms: u128, limit: u128 },

    #[error("unit-corrected determinant {0} is not a non-negative integer")]
    NonRealResult(String),

    #[error("k = {k} is outside 1..={n}")]
    BadK { n: usize, k: usize },

    #[error("{what} needs n >= {min}, got n = {n}")]
    OutOfDomain { what: &'static str, n: usize, min: usize },

    #[error("table {table} needs n >= {min}, got n = {n}")]
    TableUndefined { table: &'static str, n: usize, min: usize },

    #[error("Pell indices are non-negative, got {0}")]
    NegativeIndex(i64),

    #[error("cannot parse Gaussian integer from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
