use thiserror::Error;

/// Errors raised by the polynomial layer, the oracle and the report builder.
///
/// Bound formulas never return these: an inapplicable bound is recorded as
/// data on its [`crate::BoundResult`].
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polynomial needs at least {required} coefficients, got {found}")]
    TooFewCoefficients { required: usize, found: usize },
    #[error("coefficient {index} is not finite")]
    NonFinite { index: usize },
    #[error("leading coefficient is zero")]
    LeadingCoefficientZero,
    #[error("constant term is zero")]
    ConstantTermZero,
    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooSmall { required: usize, found: usize },
    #[error("no applicable upper bound in the result set")]
    NoApplicableUpperBound,
    #[error("root finder did not converge")]
    OracleNotConverged,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
