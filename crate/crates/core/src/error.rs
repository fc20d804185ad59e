use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit of the valuation ring: {0}")]
    NotAUnit(String),
    #[error("not integral: {0}")]
    NotIntegral(String),
    #[error("polynomial is not monic: {0}")]
    NotMonic(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inseparable polynomial: {0}")]
    InseparableInput(String),
    #[error("irreducibility could not be certified for {0}; rerun in assert mode to vouch for it")]
    IrreducibilityUncertified(String),
    #[error("value {0} is not realized by a representable element")]
    NoUniformizerAtValue(String),
    #[error("the value group has no minimum positive element")]
    NoMinimum,
    #[error("gcd({m}, {n}) = {gcd} is not 1")]
    GcdNotOne { m: String, n: String, gcd: String },
    #[error("value {0} is not a non-negative multiple of the minimum positive value")]
    ValueNotMultipleOfSigma(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures caused by the mathematical input rather than its syntax.
    pub fn is_precondition(&self) -> bool {
        !matches!(self, Error::Parse(_) | Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
