//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.

mod monomial;
mod poly;
mod text;
mod universe;

use thiserror::Error;

pub use monomial::{Monomial, MAX_EXPONENT};
pub use poly::{PolyStats, Polynomial};
pub use universe::VariableUniverse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operands belong to different variable universes")]
    UniverseMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("no value assigned to variable {0}")]
    MissingVariable(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("malformed polynomial at term {term}: {reason}")]
    Parse { term: usize, reason: String },
}
