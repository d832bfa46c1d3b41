use thiserror::Error;

/// Errors raised by the exact and numeric routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("double factorial is defined for n >= -1, got {0}")]
    DoubleFactorialDomain(i64),

    #[error("the power n must be at least 1")]
    ZeroPower,

    #[error("{what} is not an integer: {value}")]
    NonIntegral { what: String, value: String },

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("parity mismatch: {0}")]
    Parity(String),

    #[error("k must be at least {min}, got {k}")]
    KTooSmall { k: u64, min: u64 },

    #[error("cotangent pole at argument {0}")]
    CotPole(f64),

    #[error(
        "quadrature budget of {intervals} intervals exhausted; best estimate {estimate} with error estimate {error_estimate}"
    )]
    QuadratureBudget {
        intervals: usize,
        estimate: f64,
        error_estimate: f64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
