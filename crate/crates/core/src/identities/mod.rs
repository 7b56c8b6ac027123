//! Compound matrices of generic matrices and exact checks of the determinant
//! identities relating them.
//!
//! Symbolic checks expand everything over `Z[a_i_j, b_i_j]` and compare
//! canonical forms, so a pass is a proof for that size. Sizes past the
//! symbolic bounds are the oracle module's job.

mod checks;
mod compound;
mod generic;
mod quotient;
mod report;

use thiserror::Error;

use crate::exactmat::MatrixError;
use crate::polyring::PolyError;

pub use checks::{
    check_cauchy_binet, check_chio, check_chio_with, check_griolv_k2, check_lemma_adb0, check_lemma_adb0_with,
    check_sylvester, check_sylvester_with, divides, CAUCHY_BINET_BOUND, CAUCHY_BINET_MAX_DIM, GRIOLV_POINT_TRIALS,
};
pub use compound::{build_w, build_wa, CompoundMatrix, SylvesterExponents};
pub use generic::{build_generic, generic_matrix, Constraints, GenericPair, GenericSpec};
pub use quotient::{generic_det_w, quotient, quotient_with, verify_divisibility, QuotientOptions};
pub(crate) use report::elapsed_ms;
pub use report::{CheckKind, Mode, QuotientReport, VerificationReport, Witness};

/// Largest `n` for symbolic checks on one generic matrix (Sylvester, Chio).
pub const SINGLE_MAX_N: usize = 4;
/// Largest `n` for symbolic checks on a generic pair (`det W`, quotients).
pub const PAIR_MAX_N: usize = 3;

/// Whether a symbolic check may run past its default size bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Feasibility {
    #[default]
    Bounded,
    Unbounded,
}

impl Feasibility {
    fn check(self, n: usize, max: usize) -> Result<(), IdentityError> {
        match self {
            Feasibility::Bounded if n > max => Err(IdentityError::Infeasible { n, max }),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("contradictory constraints: A cannot have a zero last row and a border of ones")]
    ContradictoryConstraints,
    #[error("n = {n} exceeds the symbolic bound {max}")]
    Infeasible { n: usize, max: usize },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
