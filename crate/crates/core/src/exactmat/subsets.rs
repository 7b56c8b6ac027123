use std::fmt;

use serde::Serialize;

use super::MatrixError;

/// A subset of `[ground] = {1, ..., ground}`, stored as a strictly increasing list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    elements: Vec<usize>,
    ground: usize,
}

impl IndexSet {
    pub fn new(ground: usize, elements: Vec<usize>) -> Result<Self, MatrixError> {
        let increasing = elements.windows(2).all(|w| w[0] < w[1]);
        let in_range = elements.iter().all(|&e| (1..=ground).contains(&e));
        if !increasing || !in_range {
            return Err(MatrixError::InvalidIndexSet { ground, elements });
        }
        Ok(IndexSet { elements, ground })
    }

    /// `{1, ..., ground}`.
    pub fn full(ground: usize) -> Self {
        IndexSet {
            elements: (1..=ground).collect(),
            ground,
        }
    }

    pub fn empty(ground: usize) -> Self {
        IndexSet {
            elements: Vec::new(),
            ground,
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    /// Lifts a subset `K` of `[n]` to `K ∪ {n+1}` inside `[n+1]`.
    pub fn plus(&self) -> IndexSet {
        let mut elements = self.elements.clone();
        elements.push(self.ground + 1);
        IndexSet {
            elements,
            ground: self.ground + 1,
        }
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet {
            elements: (1..=self.ground).filter(|&i| !self.contains(i)).collect(),
            ground: self.ground,
        }
    }

    /// The same elements viewed inside a different ground set.
    pub fn with_ground(&self, ground: usize) -> Result<IndexSet, MatrixError> {
        IndexSet::new(ground, self.elements.clone())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

/// All `k`-element subsets of `[n]`, in lexicographic order of their element
/// sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    n: usize,
    k: usize,
    members: Vec<IndexSet>,
}

impl SubsetFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn members(&self) -> &[IndexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IndexSet> {
        self.members.iter()
    }

    /// Position of `set` in the family order.
    pub fn position(&self, set: &IndexSet) -> Option<usize> {
        self.members.binary_search(set).ok()
    }
}

impl<'a> IntoIterator for &'a SubsetFamily {
    type Item = &'a IndexSet;
    type IntoIter = std::slice::Iter<'a, IndexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

pub fn k_subsets(n: usize, k: usize) -> Result<SubsetFamily, MatrixError> {
    if k > n {
        return Err(MatrixError::InvalidSubsetSize { n, k });
    }
    let mut members = Vec::with_capacity(binomial(n, k) as usize);
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        members.push(IndexSet {
            elements: current.clone(),
            ground: n,
        });
        // Advance the rightmost position that still has room.
        let Some(pos) = (0..k).rev().find(|&i| current[i] < n - (k - 1 - i)) else {
            break;
        };
        current[pos] += 1;
        for i in pos + 1..k {
            current[i] = current[i - 1] + 1;
        }
    }
    Ok(SubsetFamily { n, k, members })
}

/// `n choose k`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}
