use thiserror::Error;

/// Errors produced by the solver library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported grid {m}x{n}: both dimensions must be at least 2")]
    UnsupportedGrid { m: usize, n: usize },

    #[error("cost matrix is not rectangular: row {row} has {found} entries, expected {expected}")]
    NotRectangular {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("vertex ({row},{col}) lies outside the {m}x{n} grid")]
    VertexOutOfRange {
        row: usize,
        col: usize,
        m: usize,
        n: usize,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("costs cannot be represented exactly in the integer working range")]
    CostRange,

    #[error("oracle refused a {m}x{n} grid: {limit}")]
    OracleRefused { m: usize, n: usize, limit: String },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
