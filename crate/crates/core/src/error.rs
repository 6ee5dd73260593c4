use thiserror::Error;

/// Errors raised by the algebra and code constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} has size {size}, above the configured cap {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("logarithm of zero is undefined")]
    ZeroLog,

    #[error("element is not a unit")]
    NonUnit,

    #[error("polynomial divisor is not monic (leading coefficient not a unit)")]
    NonMonic,

    /// A mathematical hypothesis does not hold, e.g. no n-th root exists.
    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: u64, max: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    /// A post-condition that should hold by construction failed.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn cap(what: impl Into<String>, size: u128, cap: u128) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size,
            cap,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
