use crate::coeff::CoeffError;
use crate::homogeneous::{HomogeneousError, ModelError};
use crate::numeric::NumericError;
use crate::scalar::ScalarError;

/// Top-level error with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Analysis(#[from] HomogeneousError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl Error {
    /// 2 for bad input, 3 for a broken internal invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Model(_) | Error::Argument(_) | Error::Coeff(_) | Error::Scalar(_) => 2,
            Error::Analysis(HomogeneousError::Model(_) | HomogeneousError::Scalar(_)) => 2,
            Error::Analysis(_) => 3,
            Error::Numeric(NumericError::BadRange { .. } | NumericError::NonPositive(_)) => 2,
            Error::Numeric(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
