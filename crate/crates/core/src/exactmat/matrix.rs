use std::fmt;

use num_bigint::BigInt;

use super::{IndexSet, MatrixError, Ring};
use crate::polyring::Polynomial;

/// A dense row-major matrix over a commutative ring.
///
/// Row and column indices in this API are 1-based, matching `[m] = {1, ..., m}`.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    ctx: T::Context,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type PolyMatrix = Matrix<Polynomial>;

impl<T: Ring> Matrix<T> {
    pub fn new(ctx: T::Context, rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.context() != ctx) {
            return Err(MatrixError::ContextMismatch);
        }
        Ok(Matrix {
            rows,
            cols,
            ctx,
            entries,
        })
    }

    pub fn from_rows(ctx: T::Context, rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(ctx, nrows, ncols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from `f(i, j)` with 1-based indices.
    pub fn from_fn(ctx: T::Context, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            ctx,
            entries,
        }
    }

    pub fn identity(ctx: T::Context, n: usize) -> Self {
        let (zero, one) = (T::zero_in(&ctx), T::one_in(&ctx));
        Matrix::from_fn(ctx, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn context(&self) -> &T::Context {
        &self.ctx
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &T {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) outside {}x{}",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub(crate) fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn map<U: Ring>(&self, ctx: U::Context, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.ctx.clone(), self.cols, self.rows, |i, j| self.entry(j, i).clone())
    }

    /// `sub_I^J`: keeps the rows in `I` and the columns in `J`, in increasing order.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Self, MatrixError> {
        let row_max = rows.elements().last().copied().unwrap_or(0);
        let col_max = cols.elements().last().copied().unwrap_or(0);
        if row_max > self.rows || col_max > self.cols {
            return Err(MatrixError::IndexOutOfRange(format!(
                "rows {rows} / cols {cols} in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows.elements() {
            for &j in cols.elements() {
                entries.push(self.entry(i, j).clone());
            }
        }
        Ok(Matrix {
            rows: rows.len(),
            cols: cols.len(),
            ctx: self.ctx.clone(),
            entries,
        })
    }

    /// Deletes row `u` and column `v` (1-based).
    pub fn remove_rc(&self, u: usize, v: usize) -> Result<Self, MatrixError> {
        if !(1..=self.rows).contains(&u) || !(1..=self.cols).contains(&v) {
            return Err(MatrixError::IndexOutOfRange(format!(
                "row {u} / column {v} in a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (1..=self.rows).filter(|&i| i != u) {
            for j in (1..=self.cols).filter(|&j| j != v) {
                entries.push(self.entry(i, j).clone());
            }
        }
        Ok(Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.ctx != rhs.ctx {
            return Err(MatrixError::ContextMismatch);
        }
        let zero = T::zero_in(&self.ctx);
        Ok(Matrix::from_fn(self.ctx.clone(), self.rows, rhs.cols, |i, j| {
            (1..=self.cols).fold(zero.clone(), |acc, t| {
                acc.plus(&self.entry(i, t).times(rhs.entry(t, j)))
            })
        }))
    }

    /// Every entry multiplied by `c`.
    pub fn scale(&self, c: &T) -> Self {
        self.map(self.ctx.clone(), |e| e.times(c))
    }

    /// Entrywise product of two matrices of the same shape.
    pub fn hadamard(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(MatrixError::DimensionMismatch(
                "hadamard product of unequal shapes".into(),
            ));
        }
        if self.ctx != rhs.ctx {
            return Err(MatrixError::ContextMismatch);
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.times(b)).collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    /// Transposed matrix of signed cofactors, so that `A * adj(A) = det(A) * I`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        self.require_square()?;
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(self.ctx.clone(), 1));
        }
        let mut entries = vec![T::zero_in(&self.ctx); n * n];
        for i in 1..=n {
            for j in 1..=n {
                let minor = T::determinant(&self.remove_rc(i, j)?)?;
                let cofactor = if (i + j) % 2 == 0 { minor } else { minor.negated() };
                entries[(j - 1) * n + (i - 1)] = cofactor;
            }
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            ctx: self.ctx.clone(),
            entries,
        })
    }

    /// Determinant by the ring's preferred algorithm.
    pub fn det(&self) -> Result<T, MatrixError> {
        T::determinant(self)
    }

    pub(crate) fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl PolyMatrix {
    /// Substitutes integer values (one per universe variable, by position).
    pub fn specialize(&self, values: &[BigInt]) -> IntMatrix {
        self.map((), |p| p.evaluate_at(values))
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    /// The matrix text format: a `rows cols kind` header, then one line per row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.rows, self.cols, T::KIND)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                self.at(i, j).fmt_entry(f)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
