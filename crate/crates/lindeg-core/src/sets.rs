//! Subsets of a ground set `[n] = {1, …, n}`.
//!
//! Elements are 1-based. All k-subsets of `[n]` are ordered
//! lexicographically; that ordering is the canonical one for Plücker
//! coordinates throughout the crate.

use std::fmt;

use itertools::Itertools;

use crate::error::{usage, Result};

/// A sorted set of distinct 1-based ground set elements.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    /// Builds a subset from arbitrary element order, deduplicating.
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Subset(elements)
    }

    /// Validates that all elements lie in `1..=n`.
    pub fn checked(elements: Vec<usize>, n: usize) -> Result<Self> {
        let s = Subset::new(elements);
        if let Some(&e) = s.0.iter().find(|&&e| e == 0 || e > n) {
            return Err(usage(format!("element {e} outside ground set [{n}]")));
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut v = self.0.clone();
        v.extend(other.iter());
        Subset::new(v)
    }

    pub fn minus(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|e| !other.contains(*e)).collect())
    }

    pub fn with(&self, e: usize) -> Subset {
        let mut v = self.0.clone();
        v.push(e);
        Subset::new(v)
    }

    pub fn without(&self, e: usize) -> Subset {
        Subset(self.0.iter().copied().filter(|&x| x != e).collect())
    }

    pub fn complement(&self, n: usize) -> Subset {
        Subset((1..=n).filter(|&e| !self.contains(e)).collect())
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.0.iter().copied().filter(|&e| other.contains(e)).collect())
    }

    /// Comma-joined element list, e.g. `1,2,4`.
    pub fn label(&self) -> String {
        self.0.iter().map(|e| e.to_string()).join(",")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.label())
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Subset::new(iter.into_iter().collect())
    }
}

/// All k-subsets of `[n]` in lexicographic order. `k > n` yields nothing.
pub fn subsets(n: usize, k: usize) -> Vec<Subset> {
    if k > n {
        return Vec::new();
    }
    (1..=n).combinations(k).map(Subset).collect()
}

/// All k-subsets of the given sorted element list, lexicographically.
pub fn subsets_of(elements: &[usize], k: usize) -> Vec<Subset> {
    if k > elements.len() {
        return Vec::new();
    }
    elements.iter().copied().combinations(k).map(Subset::new).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let s = subsets(4, 2);
        let labels: Vec<String> = s.iter().map(|x| x.label()).collect();
        assert_eq!(labels, ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"]);
        assert_eq!(subsets(4, 0), vec![Subset::empty()]);
        assert!(subsets(3, 4).is_empty());
    }

    #[test]
    fn set_operations() {
        let a = Subset::new(vec![3, 1]);
        let b = Subset::new(vec![3, 4]);
        assert_eq!(a.union(&b).label(), "1,3,4");
        assert_eq!(a.minus(&b).label(), "1");
        assert_eq!(a.complement(4).label(), "2,4");
        assert!(a.with(2).contains(2));
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn checked_rejects_out_of_range() {
        assert!(Subset::checked(vec![0], 4).is_err());
        assert!(Subset::checked(vec![5], 4).is_err());
        assert!(Subset::checked(vec![1, 4], 4).is_ok());
    }
}
