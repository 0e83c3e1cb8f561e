use thiserror::Error;

/// Errors raised by the optimizer, its variants and the experiment harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum BatError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("objective evaluation failed for bat {bat}: {source}")]
    Objective {
        bat: usize,
        #[source]
        source: ObjectiveError,
    },

    #[error("run {run} failed: {source}")]
    Run {
        run: usize,
        #[source]
        source: Box<BatError>,
    },
}

/// Failure reported by an objective function.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ObjectiveError {
    #[error("objective returned NaN")]
    NotANumber,
    #[error("{0}")]
    Failed(String),
}

pub type Result<T, E = BatError> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> BatError {
    BatError::InvalidArgument(msg.into())
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(BatError::DimensionMismatch { expected, found })
    }
}
