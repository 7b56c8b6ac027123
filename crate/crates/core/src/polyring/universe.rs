use std::collections::HashMap;
use std::fmt;

use super::PolyError;

/// An ordered set of named indeterminates.
///
/// The position of a name is its rank in the canonical variable order: index 0
/// is the most significant variable under the lexicographic monomial order.
#[derive(Clone)]
pub struct VariableUniverse {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableUniverse {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VariableUniverse { names, index })
    }

    /// A universe with no variables; its polynomials are integer constants.
    pub fn empty() -> Self {
        VariableUniverse {
            names: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

impl PartialEq for VariableUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VariableUniverse {}

impl fmt::Debug for VariableUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        let err = VariableUniverse::new(["x", "y", "x"]).unwrap_err();
        assert_eq!(err, PolyError::DuplicateVariable("x".into()));
    }

    #[test]
    fn rejects_non_identifiers() {
        assert!(VariableUniverse::new(["a_1_1", "2x"]).is_err());
        assert!(VariableUniverse::new(["a^2"]).is_err());
        assert!(VariableUniverse::new([""]).is_err());
    }

    #[test]
    fn positions_follow_construction_order() {
        let u = VariableUniverse::new(["a_1_1", "a_1_2", "b_1_1"]).unwrap();
        assert_eq!(u.position("a_1_2"), Some(1));
        assert_eq!(u.position("b_1_1"), Some(2));
        assert_eq!(u.position("z"), None);
        assert_eq!(u.name(0), "a_1_1");
    }
}
