use rayon::prelude::*;

use super::IdentityError;
use crate::exactmat::{binomial, k_subsets, IndexSet, Matrix, Ring, SubsetFamily};

/// A `P_k x P_k` matrix, rows and columns labelled by the `k`-subsets of `[n]`
/// in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct CompoundMatrix<T: Ring> {
    family: SubsetFamily,
    matrix: Matrix<T>,
}

impl<T: Ring> CompoundMatrix<T> {
    pub fn family(&self) -> &SubsetFamily {
        &self.family
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    /// The entry labelled `(I, J)`.
    pub fn entry(&self, rows: &IndexSet, cols: &IndexSet) -> Option<&T> {
        let i = self.family.position(rows)?;
        let j = self.family.position(cols)?;
        Some(self.matrix.entry(i + 1, j + 1))
    }

    pub fn det(&self) -> Result<T, IdentityError> {
        Ok(self.matrix.det()?)
    }
}

/// Checks that `a` is `(n+1) x (n+1)` for some `n >= k` and returns `n`.
fn compound_size<T: Ring>(a: &Matrix<T>, k: usize) -> Result<usize, IdentityError> {
    if !a.is_square() || a.rows() == 0 {
        return Err(IdentityError::InvalidParameter(format!(
            "expected a nonempty square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows() - 1;
    if k > n {
        return Err(IdentityError::InvalidParameter(format!("k = {k} exceeds n = {n}")));
    }
    Ok(n)
}

/// `W_A`: entry `(I, J)` is `det(sub_{I+}^{J+} A)`, the `(k+1)`-minor of `A`
/// through its last row and last column.
///
/// Minors are computed independently across threads; the result does not
/// depend on scheduling.
pub fn build_wa<T: Ring>(a: &Matrix<T>, k: usize) -> Result<CompoundMatrix<T>, IdentityError> {
    let n = compound_size(a, k)?;
    let family = k_subsets(n, k)?;
    let lifted: Vec<IndexSet> = family.iter().map(IndexSet::plus).collect();
    let side = family.len();
    debug_assert_eq!(side as u64, binomial(n, k));
    let entries = (0..side * side)
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / side, idx % side);
            a.submatrix(&lifted[i], &lifted[j])?.det()
        })
        .collect::<Result<Vec<T>, _>>()?;
    let matrix = Matrix::new(a.context().clone(), side, side, entries)?;
    Ok(CompoundMatrix { family, matrix })
}

/// `W`: entry `(I, J)` is `det(sub_{I+}^{J+} A) * det(sub_{I+}^{J+} B)`, the
/// entrywise product of `W_A` and `W_B`.
pub fn build_w<T: Ring>(a: &Matrix<T>, b: &Matrix<T>, k: usize) -> Result<CompoundMatrix<T>, IdentityError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(IdentityError::InvalidParameter(format!(
            "A is {}x{} but B is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let wa = build_wa(a, k)?;
    let wb = build_wa(b, k)?;
    let matrix = wa.matrix.hadamard(&wb.matrix)?;
    Ok(CompoundMatrix {
        family: wa.family,
        matrix,
    })
}

/// Exponents in `det(W_A) = a_{n+1,n+1}^p * (det A)^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SylvesterExponents {
    pub p: u32,
    pub q: u32,
}

impl SylvesterExponents {
    /// `p = C(n-1, k)`, `q = C(n-1, k-1)` (zero when `k = 0`). Needs `n >= 1`.
    pub fn new(n: usize, k: usize) -> Result<Self, IdentityError> {
        if n == 0 || k > n {
            return Err(IdentityError::InvalidParameter(format!(
                "exponents need 1 <= n and k <= n, got n = {n}, k = {k}"
            )));
        }
        let p = binomial(n - 1, k);
        let q = if k == 0 { 0 } else { binomial(n - 1, k - 1) };
        let to_u32 =
            |v: u64| u32::try_from(v).map_err(|_| IdentityError::InvalidParameter("exponent too large".into()));
        Ok(SylvesterExponents {
            p: to_u32(p)?,
            q: to_u32(q)?,
        })
    }
}
