use crate::{Error, Result};

/// A subset of the elements of a monoid, stored as a membership mask over
/// element indices. Iteration is always in ascending index order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSubset {
    mask: Vec<bool>,
}

impl ElementSubset {
    /// The empty subset of an `n`-element monoid.
    pub fn empty(n: usize) -> Self {
        ElementSubset {
            mask: vec![false; n],
        }
    }

    /// The full subset of an `n`-element monoid.
    pub fn full(n: usize) -> Self {
        ElementSubset {
            mask: vec![true; n],
        }
    }

    /// The singleton `{i}`.
    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.mask[i] = true;
        s
    }

    /// Builds a subset from explicit indices, rejecting out-of-range ones.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &i in indices {
            if i >= n {
                return Err(Error::structure(format!(
                    "subset index {i} out of range for {n} elements"
                )));
            }
            s.mask[i] = true;
        }
        Ok(s)
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ElementSubset { mask }
    }

    /// Ground-set size (not the cardinality of the subset).
    pub fn ground_size(&self) -> usize {
        self.mask.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn insert(&mut self, i: usize) {
        self.mask[i] = true;
    }

    pub fn remove(&mut self, i: usize) {
        self.mask[i] = false;
    }

    /// Cardinality of the subset.
    pub fn card(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.iter().all(|&b| !b)
    }

    /// Members in ascending index order.
    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    pub fn intersect(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }

    pub fn complement(&self) -> ElementSubset {
        ElementSubset {
            mask: self.mask.iter().map(|&a| !a).collect(),
        }
    }

    /// Shortlex key: (cardinality, ascending member list). Used wherever a
    /// family of subsets must be emitted in a canonical order.
    pub fn shortlex_key(&self) -> (usize, Vec<usize>) {
        (self.card(), self.members())
    }
}
