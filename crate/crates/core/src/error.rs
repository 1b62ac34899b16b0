use thiserror::Error;

/// Errors raised by the numerical routines and channel constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}")]
    NoBracket { a: f64, b: f64, fa: f64, fb: f64 },

    #[error("invalid interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("g(rho, .) is constant at rho = {rho} and cannot be inverted")]
    NotInvertible { rho: f64 },

    #[error("value {value} is outside the achievable range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("invalid channel: {0}")]
    InvalidChannel(String),

    #[error("invalid Z distribution: {0}")]
    InvalidDistribution(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
