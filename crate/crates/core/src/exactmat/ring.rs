use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{det_bareiss, det_laplace, Matrix, MatrixError};
use crate::polyring::{Polynomial, VariableUniverse};

/// Commutative ring elements that can fill a [`Matrix`].
///
/// `Context` carries whatever is needed to manufacture constants without an
/// existing element: nothing for integers, the variable universe for
/// polynomials.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Sized {
    type Context: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Tag written in the matrix text header.
    const KIND: &'static str;

    fn zero_in(ctx: &Self::Context) -> Self;
    fn one_in(ctx: &Self::Context) -> Self;
    fn from_i64(ctx: &Self::Context, v: i64) -> Self;
    fn context(&self) -> Self::Context;

    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// Determinant by the algorithm best suited to this ring.
    fn determinant(m: &Matrix<Self>) -> Result<Self, MatrixError> {
        det_laplace(m)
    }

    fn fmt_entry(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Ring for BigInt {
    type Context = ();
    const KIND: &'static str = "int";

    fn zero_in(_: &()) -> Self {
        Zero::zero()
    }

    fn one_in(_: &()) -> Self {
        One::one()
    }

    fn from_i64(_: &(), v: i64) -> Self {
        BigInt::from(v)
    }

    fn context(&self) {}

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn determinant(m: &Matrix<Self>) -> Result<Self, MatrixError> {
        det_bareiss(m)
    }

    fn fmt_entry(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Ring for Polynomial {
    type Context = Arc<VariableUniverse>;
    const KIND: &'static str = "poly";

    fn zero_in(ctx: &Self::Context) -> Self {
        Polynomial::zero(ctx)
    }

    fn one_in(ctx: &Self::Context) -> Self {
        Polynomial::one(ctx)
    }

    fn from_i64(ctx: &Self::Context, v: i64) -> Self {
        Polynomial::constant(ctx, v)
    }

    fn context(&self) -> Self::Context {
        Arc::clone(self.universe())
    }

    fn is_zero_elem(&self) -> bool {
        Polynomial::is_zero(self)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn fmt_entry(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}
