//! Sorted element subsets of one carrier, used for subgroups and object sets.

use crate::words::ElementId;
use std::fmt;

/// A subset of a carrier, stored sorted and deduplicated. Ordering on
/// `ElementSet` is lexicographic on the sorted index lists, which gives every
/// family of subgroups a canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    indices: Vec<u16>,
}

impl ElementSet {
    pub fn new(mut indices: Vec<u16>) -> ElementSet {
        indices.sort_unstable();
        indices.dedup();
        ElementSet { indices }
    }

    pub fn from_ids(ids: impl IntoIterator<Item = ElementId>) -> ElementSet {
        ElementSet::new(ids.into_iter().map(|e| e.0).collect())
    }

    pub fn singleton(id: ElementId) -> ElementSet {
        ElementSet {
            indices: vec![id.0],
        }
    }

    pub fn empty() -> ElementSet {
        ElementSet {
            indices: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.indices.binary_search(&id.0).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.indices.iter().all(|&i| other.indices.binary_search(&i).is_ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.indices.iter().map(|&i| ElementId(i))
    }

    pub fn indices(&self) -> &[u16] {
        &self.indices
    }

    pub fn insert(&mut self, id: ElementId) -> bool {
        match self.indices.binary_search(&id.0) {
            Ok(_) => false,
            Err(pos) => {
                self.indices.insert(pos, id.0);
                true
            }
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut indices = self.indices.clone();
        indices.extend_from_slice(&other.indices);
        ElementSet::new(indices)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            indices: self
                .indices
                .iter()
                .copied()
                .filter(|i| other.indices.binary_search(i).is_ok())
                .collect(),
        }
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<T: IntoIterator<Item = ElementId>>(iter: T) -> Self {
        ElementSet::from_ids(iter)
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "#{i}")?;
        }
        write!(f, "}}")
    }
}
