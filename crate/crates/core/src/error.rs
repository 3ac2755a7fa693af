use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("root iteration did not converge after {iterations} iterations")]
    NumericFailure { iterations: usize, best: Vec<Complex64> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn check_index(index: usize, n: usize) -> Result<()> {
    if index < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, n })
    }
}
