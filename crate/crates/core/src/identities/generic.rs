use std::sync::Arc;

use super::IdentityError;
use crate::exactmat::{Matrix, PolyMatrix};
use crate::polyring::{Polynomial, VariableUniverse};

/// Which entries of the generic pair are pinned to constants.
///
/// The "last row" and "border" flags refer to row and column `n+1` of the
/// `(n+1) x (n+1)` matrices; the corner is entry `(n+1, n+1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    pub a_corner_zero: bool,
    pub b_corner_zero: bool,
    /// `a_{n+1,j} = 0` for `j <= n`; the corner is governed by `a_corner_zero`.
    pub a_last_row_zero: bool,
    /// Row and column `n+1` of `A`, except the corner, are all 1.
    pub borders_one_a: bool,
    pub borders_one_b: bool,
}

impl Constraints {
    pub const NONE: Constraints = Constraints {
        a_corner_zero: false,
        b_corner_zero: false,
        a_last_row_zero: false,
        borders_one_a: false,
        borders_one_b: false,
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericSpec {
    pub n: usize,
    pub constraints: Constraints,
}

impl GenericSpec {
    pub fn new(n: usize, constraints: Constraints) -> Self {
        GenericSpec { n, constraints }
    }

    pub fn unconstrained(n: usize) -> Self {
        GenericSpec::new(n, Constraints::NONE)
    }
}

/// Two symbolic `(n+1) x (n+1)` matrices sharing one universe.
#[derive(Clone, Debug)]
pub struct GenericPair {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub universe: Arc<VariableUniverse>,
}

/// What an entry of a generic matrix is fixed to, if anything.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Free,
    Const(i64),
}

struct Shape {
    corner_zero: bool,
    last_row_zero: bool,
    borders_one: bool,
}

impl Shape {
    fn slot(&self, size: usize, i: usize, j: usize) -> Slot {
        let corner = i == size && j == size;
        if corner {
            return if self.corner_zero { Slot::Const(0) } else { Slot::Free };
        }
        if self.borders_one && (i == size || j == size) {
            return Slot::Const(1);
        }
        if self.last_row_zero && i == size {
            return Slot::Const(0);
        }
        Slot::Free
    }

    fn free_names(&self, prefix: char, size: usize) -> Vec<String> {
        let mut names = Vec::new();
        for i in 1..=size {
            for j in 1..=size {
                if self.slot(size, i, j) == Slot::Free {
                    names.push(format!("{prefix}_{i}_{j}"));
                }
            }
        }
        names
    }

    fn build(&self, prefix: char, size: usize, universe: &Arc<VariableUniverse>) -> PolyMatrix {
        Matrix::from_fn(Arc::clone(universe), size, size, |i, j| match self.slot(size, i, j) {
            Slot::Const(c) => Polynomial::constant(universe, c),
            Slot::Free => {
                let name = format!("{prefix}_{i}_{j}");
                Polynomial::var(universe, &name).expect("free entry has a variable")
            }
        })
    }
}

/// Builds symbolic `A` and `B` whose unconstrained entries are the distinct
/// variables `a_i_j` and `b_i_j`. Constrained entries are the constants 0 or 1
/// and contribute no variables.
pub fn build_generic(spec: &GenericSpec) -> Result<GenericPair, IdentityError> {
    let c = spec.constraints;
    if c.borders_one_a && c.a_last_row_zero {
        return Err(IdentityError::ContradictoryConstraints);
    }
    let size = spec.n + 1;
    let shape_a = Shape {
        corner_zero: c.a_corner_zero,
        last_row_zero: c.a_last_row_zero,
        borders_one: c.borders_one_a,
    };
    let shape_b = Shape {
        corner_zero: c.b_corner_zero,
        last_row_zero: false,
        borders_one: c.borders_one_b,
    };
    let mut names = shape_a.free_names('a', size);
    names.extend(shape_b.free_names('b', size));
    let universe = Arc::new(VariableUniverse::new(names)?);
    Ok(GenericPair {
        a: shape_a.build('a', size, &universe),
        b: shape_b.build('b', size, &universe),
        universe,
    })
}

/// A single unconstrained symbolic `(n+1) x (n+1)` matrix over `a`-variables only.
pub fn generic_matrix(n: usize) -> PolyMatrix {
    let shape = Shape {
        corner_zero: false,
        last_row_zero: false,
        borders_one: false,
    };
    let universe = Arc::new(VariableUniverse::new(shape.free_names('a', n + 1)).expect("distinct names"));
    shape.build('a', n + 1, &universe)
}
