//! Exact algebraic substrate: rationals, polynomials in `s`, rational
//! functions, and admittance coefficient vectors. Nothing in this module
//! (or anywhere downstream of it) touches floating point.

pub mod coeffs;
pub mod poly;
pub mod quad;
pub mod rat;
pub mod ratfun;

pub use coeffs::{coefficient_form, extract_cubic, extract_quartic, CoefficientVector};
pub use poly::{Poly, Scalar};
pub use quad::Quad;
pub use rat::Rat;
pub use ratfun::RationalFunction;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an exact rational: {0}")]
    BadRational(String),
    #[error("cannot parse rational function: {0}")]
    BadFunction(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
}
