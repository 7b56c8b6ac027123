//! Dense matrices over integers or polynomials: submatrices, index subsets, and
//! three independent determinant algorithms.

mod det;
mod matrix;
mod ring;
mod subsets;
mod text;

use thiserror::Error;

use crate::polyring::PolyError;

pub use det::{brute_force_det, det_bareiss, det_laplace, BRUTE_FORCE_MAX, LAPLACE_MAX};
pub use matrix::{IntMatrix, Matrix, PolyMatrix};
pub use ring::Ring;
pub use subsets::{binomial, k_subsets, IndexSet, SubsetFamily};
pub use text::AnyMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid index set {elements:?} in [{ground}]")]
    InvalidIndexSet { ground: usize, elements: Vec<usize> },
    #[error("no {k}-element subsets of [{n}]")]
    InvalidSubsetSize { n: usize, k: usize },
    #[error("size {size} exceeds the limit {max}")]
    TooLarge { size: usize, max: usize },
    #[error("entries come from different rings or universes")]
    ContextMismatch,
    #[error("{0}")]
    EntryKind(&'static str),
    #[error("malformed matrix text: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
