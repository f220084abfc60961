use thiserror::Error;

/// Failures of the q-series kernel and the Schur machinery built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: lowest known coefficient is not +1 or -1")]
    NotInvertible,
    #[error("comparison up to q^{up_to} exceeds known order {order}")]
    OrderTooHigh { up_to: i64, order: i64 },
    #[error("index {index} is out of range (minimum {min})")]
    IndexOutOfRange { index: i64, min: i64 },
    #[error("n = {n} exceeds the direct determinant bound {max}")]
    TooLarge { n: u32, max: u32 },
    #[error("division is not exact")]
    InexactDivision,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
