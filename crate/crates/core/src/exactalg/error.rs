use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes under substitution: {0}")]
    VanishingDenominator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}
