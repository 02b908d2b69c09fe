//! Exact arithmetic in Q(z, w): Laurent polynomials and reduced fractions.

mod dense;
mod laurent;
mod ratfun;

pub use laurent::{LaurentPoly2, Monomial};
pub use ratfun::RatFun;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("ZeroDenominator: division by zero")]
    ZeroDenominator,
    #[error("NotPolynomial: reduced denominator {0} is not a unit")]
    NotPolynomial(String),
    #[error("OddParity: odd exponent where an even one was required")]
    OddParity,
    #[error("Pole: evaluation at a pole")]
    Pole,
    #[error("Parse: {0}")]
    Parse(String),
}

/// Variable names for the (z, w) parameters.
pub const ZW: [&str; 2] = ["z", "w"];
/// Variable names for the (q, t) parameters.
pub const QT: [&str; 2] = ["q", "t"];
