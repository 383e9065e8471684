use thiserror::Error;

/// Errors raised by configuration validation and matrix operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cutoff s = {0} is too small; need s >= 2")]
    CutoffTooSmall(usize),

    #[error("root index k = {k} is not coprime to s + 1 = {order}; q would not be a primitive root")]
    NotPrimitive { k: u64, order: usize },

    #[error("tolerance must be finite and positive, got {0}")]
    InvalidTolerance(f64),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix needs {expected} entries, got {actual}")]
    EntryCount { expected: usize, actual: usize },

    #[error("non-finite entry at position {0}")]
    NonFinite(usize),

    #[error("invalid sweep range: s_min = {s_min}, s_max = {s_max}")]
    InvalidRange { s_min: usize, s_max: usize },

    #[error("brute-force oracle is limited to s <= {max}, got s = {s}")]
    OracleTooLarge { s: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
