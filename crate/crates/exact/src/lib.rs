//! Exact arithmetic over Q(i)[p,q][kappa, 1/kappa] and rational functions
//! whose poles sit at x = 0 and x = 1.

pub mod fit;
pub mod gaussian;
mod json;
pub mod multix;
pub mod param;
pub mod xrational;

pub use fit::{fit_polynomial_in_k, KPoly};
pub use gaussian::{parse_rational, rational_to_string, GaussianRational};
pub use multix::{exact_divide_difference, MultiXRationalFn, XPoly};
pub use param::{KappaMap, ParamPoly, ParamScalar};
pub use xrational::XRationalFn;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by a non-monomial element of the coefficient ring")]
    NonMonomialDivision,
    #[error("nonzero remainder dividing by {0}")]
    NonzeroRemainder(String),
    #[error("function does not decay at infinity")]
    NotDecaying,
    #[error("need {needed} distinct samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("sample at k = {k} is not on the degree-{degree} interpolant")]
    FitInconsistent { k: i64, degree: usize },
    #[error("bad variable pair ({0}, {1})")]
    BadIndex(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
}
