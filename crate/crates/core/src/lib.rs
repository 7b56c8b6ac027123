//! Exact computer algebra for minor-product compound matrices.
//!
//! Compound matrices here have minors through the last row and column as
//! entries. Identities about their determinants are checked exactly:
//! symbolically over `Z[a_i_j, b_i_j]` at small sizes, by integer
//! specialization at larger ones.
//!
//! - [`polyring`]: sparse multivariate integer polynomials.
//! - [`exactmat`]: matrices, index subsets, determinants.
//! - [`identities`]: compound matrices, identity checks, quotients.
//! - [`oracle`]: seeded randomized integer-point testing.
//! - [`suite`]: the end-to-end self-test.

pub mod exactmat;
pub mod identities;
pub mod oracle;
pub mod polyring;
pub mod suite;

pub use exactmat::{
    brute_force_det, det_bareiss, det_laplace, k_subsets, AnyMatrix, IndexSet, IntMatrix, Matrix, MatrixError,
    PolyMatrix, Ring, SubsetFamily,
};
pub use identities::{
    CheckKind, CompoundMatrix, Constraints, Feasibility, GenericPair, GenericSpec, IdentityError, Mode,
    QuotientOptions, QuotientReport, SylvesterExponents, VerificationReport, Witness,
};
pub use oracle::{ControlInfo, FuzzPlan, FuzzReport, Theorem};
pub use polyring::{Monomial, PolyError, PolyStats, Polynomial, VariableUniverse};
