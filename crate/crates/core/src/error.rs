use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("antiderivative is not rational (nonzero logarithmic part)")]
    NonRationalIntegral,
    #[error("Wronskian of the family vanishes identically")]
    SingularFamily,
    #[error("{0} vanishes identically")]
    ZeroFunction(String),
    #[error("rho_x vanishes identically")]
    DegenerateRho,
    #[error("mu^2 = {0} is not the square of a rational")]
    IrrationalMu(String),
    #[error("denominator of {0} vanishes identically")]
    DegenerateDenominator(String),
    #[error("{0}")]
    Domain(String),
    #[error("step {index} ({letter}): {reason}")]
    DegenerateStep {
        index: usize,
        letter: String,
        reason: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
