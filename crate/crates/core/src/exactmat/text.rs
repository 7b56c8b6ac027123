//! Matrix text format.
//!
//! ```text
//! 2 2 int
//! 1 -2
//! 0 4
//! ```
//!
//! The header is `rows cols kind` with kind `int` or `poly`. Entries on a row
//! are separated by single spaces. A polynomial entry is its canonical text
//! form wrapped in brackets (the canonical form itself contains spaces).

use std::sync::Arc;

use num_bigint::BigInt;

use super::{IntMatrix, Matrix, MatrixError, PolyMatrix};
use crate::polyring::{Polynomial, VariableUniverse};

/// A parsed matrix of either entry kind.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Int(IntMatrix),
    Poly(PolyMatrix),
}

impl AnyMatrix {
    /// Parses the text format. Polynomial matrices need the universe their
    /// variables live in.
    pub fn parse(text: &str, universe: Option<&Arc<VariableUniverse>>) -> Result<AnyMatrix, MatrixError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| parse_err("missing header"))?;
        let fields: Vec<&str> = header.split(' ').collect();
        let [rows, cols, kind] = fields.as_slice() else {
            return Err(parse_err(format!("bad header {header:?}")));
        };
        let rows: usize = rows.parse().map_err(|_| parse_err(format!("bad row count {rows:?}")))?;
        let cols: usize = cols
            .parse()
            .map_err(|_| parse_err(format!("bad column count {cols:?}")))?;
        let body: Vec<&str> = lines.collect();
        if body.len() != rows {
            return Err(parse_err(format!("expected {rows} rows, found {}", body.len())));
        }
        match *kind {
            "int" => {
                let mut entries = Vec::with_capacity(rows * cols);
                for line in &body {
                    let row: Vec<&str> = if line.is_empty() {
                        Vec::new()
                    } else {
                        line.split(' ').collect()
                    };
                    if row.len() != cols {
                        return Err(parse_err(format!("expected {cols} entries in {line:?}")));
                    }
                    for tok in row {
                        let v: BigInt = tok.parse().map_err(|_| parse_err(format!("bad integer {tok:?}")))?;
                        entries.push(v);
                    }
                }
                Ok(AnyMatrix::Int(Matrix::new((), rows, cols, entries)?))
            }
            "poly" => {
                let universe = universe.ok_or_else(|| parse_err("polynomial matrix needs a variable universe"))?;
                let mut entries = Vec::with_capacity(rows * cols);
                for line in &body {
                    let row = split_bracketed(line)?;
                    if row.len() != cols {
                        return Err(parse_err(format!("expected {cols} entries in {line:?}")));
                    }
                    for tok in row {
                        entries.push(Polynomial::parse(universe, tok)?);
                    }
                }
                Ok(AnyMatrix::Poly(Matrix::new(Arc::clone(universe), rows, cols, entries)?))
            }
            other => Err(parse_err(format!("unknown kind {other:?}"))),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Int(m) => m.rows(),
            AnyMatrix::Poly(m) => m.rows(),
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            AnyMatrix::Int(m) => m.cols(),
            AnyMatrix::Poly(m) => m.cols(),
        }
    }

    /// Fraction-free determinant; defined for integer matrices only.
    pub fn det_bareiss(&self) -> Result<BigInt, MatrixError> {
        match self {
            AnyMatrix::Int(m) => super::det_bareiss(m),
            AnyMatrix::Poly(_) => Err(MatrixError::EntryKind(
                "fraction-free elimination needs integer entries",
            )),
        }
    }
}

fn split_bracketed(line: &str) -> Result<Vec<&str>, MatrixError> {
    let mut out = Vec::new();
    let mut rest = line;
    while !rest.is_empty() {
        let inner = rest
            .strip_prefix('[')
            .ok_or_else(|| parse_err(format!("expected '[' in {line:?}")))?;
        let close = inner
            .find(']')
            .ok_or_else(|| parse_err(format!("unclosed '[' in {line:?}")))?;
        out.push(&inner[..close]);
        rest = &inner[close + 1..];
        if !rest.is_empty() {
            rest = rest
                .strip_prefix(' ')
                .filter(|r| !r.is_empty())
                .ok_or_else(|| parse_err(format!("expected single space between entries in {line:?}")))?;
        }
    }
    Ok(out)
}

fn parse_err(msg: impl Into<String>) -> MatrixError {
    MatrixError::Parse(msg.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_round_trip() {
        let text = "2 3 int\n1 -2 30\n0 4 -5\n";
        let m = AnyMatrix::parse(text, None).unwrap();
        let AnyMatrix::Int(inner) = &m else {
            panic!("wrong kind")
        };
        assert_eq!(inner.to_string(), text);
        assert_eq!(m.det_bareiss(), Err(MatrixError::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn polynomial_round_trip() {
        let u = Arc::new(VariableUniverse::new(["a_1_1", "a_1_2"]).unwrap());
        let text = "1 2 poly\n[+1*a_1_1 -2*a_1_2] [0]\n";
        let m = AnyMatrix::parse(text, Some(&u)).unwrap();
        let AnyMatrix::Poly(inner) = &m else {
            panic!("wrong kind")
        };
        assert_eq!(inner.to_string(), text);
        assert!(matches!(m.det_bareiss(), Err(MatrixError::EntryKind(_))));
        assert!(AnyMatrix::parse(text, None).is_err());
    }

    #[test]
    fn malformed_inputs() {
        let u = Arc::new(VariableUniverse::new(["x"]).unwrap());
        for (text, uni) in [
            ("2 2 int\n1 2\n", None),
            ("2 2 int\n1 2\n3\n", None),
            ("1 1 real\n1\n", None),
            ("1 1 int\nx\n", None),
            ("1 2 int\n1  2\n", None),
            ("1 2 poly\n[+1*x][0]\n", Some(&u)),
            ("1 2 poly\n[+1*x]  [0]\n", Some(&u)),
            ("1 1 poly\n[+1*y]\n", Some(&u)),
            ("1 1\n1\n", None),
        ] {
            assert!(AnyMatrix::parse(text, uni).is_err(), "accepted {text:?}");
        }
    }
}
