//! Sparse multivariate and dense univariate polynomials over `F_p`.
//!
//! Monomials are ordered graded-lexicographically: by total degree, then
//! lexicographically on the exponent vector starting at `X1`. In two
//! variables this gives `1 < X2 < X1 < X2^2 < X1*X2 < X1^2`.

mod affine;
mod monomial;
mod multi;
mod text;
mod uni;

use thiserror::Error;

pub use affine::AffineForm;
pub use monomial::{graded_lex_prev, monomials_up_to, Monomial, MAX_DEGREE, MAX_VARS};
pub use multi::{poly_divide, MultiPoly};
pub use uni::{interpolate_univariate, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("repeated abscissa {0}")]
    RepeatedAbscissa(u64),
    #[error("line direction is zero")]
    ZeroDirection,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
