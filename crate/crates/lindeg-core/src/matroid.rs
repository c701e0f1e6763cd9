//! Valuated matroids stored as basis valuations.
//!
//! A rank-`r` valuated matroid on `[n]` is a map `ν` from the r-subsets of
//! `[n]` to `𝕋` with at least one finite value, subject to the tropical
//! exchange axiom: for all r-subsets `I, J` and `i ∈ I∖J` there is some
//! `j ∈ J∖I` with
//!
//! ```text
//! ν(I) + ν(J) ≥ ν((I∖i)∪j) + ν((J∖j)∪i).
//! ```
//!
//! [`PlueckerVector`] is the raw object (an arbitrary point of
//! `ℙ(𝕋^C(n,r))`, dense over all r-subsets, canonically normalized so the
//! minimum finite value is zero); [`ValuatedMatroid`] is a Plücker vector
//! that has passed the exchange check. Keeping the two apart lets
//! unvalidated Dressian candidates flow through the relation machinery.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{domain, usage, Result};
use crate::sets::{subsets, Subset};
use crate::trop::TropicalValue;

/// A point of `ℙ(𝕋^C(n,r))`: a value for every r-subset of `[n]`, at
/// least one of them finite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerVector {
    n: usize,
    r: usize,
    values: BTreeMap<Subset, TropicalValue>,
}

impl PlueckerVector {
    /// Builds and canonically normalizes a Plücker vector. The map may
    /// omit subsets, which are taken to be `∞`; extraneous or malformed
    /// keys are rejected.
    pub fn new(n: usize, r: usize, mut given: BTreeMap<Subset, TropicalValue>) -> Result<Self> {
        if r > n {
            return Err(usage(format!("rank {r} exceeds ground set size {n}")));
        }
        for key in given.keys() {
            if key.len() != r {
                return Err(usage(format!("subset {key} does not have cardinality {r}")));
            }
            if let Some(&e) = key.elements().iter().find(|&&e| e == 0 || e > n) {
                return Err(usage(format!("element {e} outside ground set [{n}]")));
            }
        }
        let mut values = BTreeMap::new();
        for b in subsets(n, r) {
            let v = given.remove(&b).unwrap_or(TropicalValue::Infinity);
            values.insert(b, v);
        }
        let mut pv = PlueckerVector { n, r, values };
        pv.normalize()?;
        Ok(pv)
    }

    /// Convenience constructor: values for all r-subsets in lexicographic
    /// order, `None` meaning `∞`.
    pub fn from_dense(n: usize, r: usize, dense: &[Option<i64>]) -> Result<Self> {
        let keys = subsets(n, r);
        if keys.len() != dense.len() {
            return Err(usage(format!(
                "expected {} values for C({n},{r}), got {}",
                keys.len(),
                dense.len()
            )));
        }
        let map = keys
            .into_iter()
            .zip(dense.iter())
            .map(|(k, v)| (k, v.map_or(TropicalValue::Infinity, TropicalValue::from_int)))
            .collect();
        PlueckerVector::new(n, r, map)
    }

    fn normalize(&mut self) -> Result<()> {
        let min = self
            .values
            .values()
            .filter_map(TropicalValue::as_rat)
            .min()
            .cloned()
            .ok_or_else(|| domain("all basis valuations are infinite"))?;
        for v in self.values.values_mut() {
            *v = v.shift(&min);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn value(&self, b: &Subset) -> &TropicalValue {
        self.values
            .get(b)
            .unwrap_or_else(|| panic!("subset {b} is not an index of this Plücker vector"))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Subset, &TropicalValue)> {
        self.values.iter()
    }

    /// Values in lexicographic subset order.
    pub fn dense(&self) -> Vec<TropicalValue> {
        self.values.values().cloned().collect()
    }

    /// The tropical exchange axiom, quantifier by quantifier. Returns the
    /// lexicographically first witness `(I, J, i)` for which no `j` works.
    pub fn exchange_counterexample(&self) -> Option<(Subset, Subset, usize)> {
        let bases: Vec<&Subset> = self.values.keys().collect();
        for i_set in &bases {
            for j_set in &bases {
                let value_lhs = self.value(i_set).plus(self.value(j_set));
                if !value_lhs.is_finite() {
                    continue;
                }
                for i in i_set.minus(j_set).iter() {
                    let ok = j_set.minus(i_set).iter().any(|j| {
                        let left = i_set.without(i).with(j);
                        let right = j_set.without(j).with(i);
                        let rhs = self.value(&left).plus(self.value(&right));
                        match (&value_lhs, &rhs) {
                            (TropicalValue::Infinity, _) => true,
                            (TropicalValue::Finite(_), TropicalValue::Infinity) => false,
                            (TropicalValue::Finite(l), TropicalValue::Finite(r)) => l >= r,
                        }
                    });
                    if !ok {
                        return Some(((*i_set).clone(), (*j_set).clone(), i));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_exchange_axiom(&self) -> bool {
        self.exchange_counterexample().is_none()
    }
}

impl fmt::Display for PlueckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (b, v)) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}:{v}")?;
        }
        write!(f, "]")
    }
}

/// A Plücker vector that satisfies the tropical exchange axiom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuatedMatroid(PlueckerVector);

impl ValuatedMatroid {
    pub fn from_vector(pv: PlueckerVector) -> Result<Self> {
        if let Some((i, j, e)) = pv.exchange_counterexample() {
            return Err(domain(format!(
                "exchange axiom fails at I={i}, J={j}, i={e}"
            )));
        }
        Ok(ValuatedMatroid(pv))
    }

    /// The trivial (all-zero) valuation on the uniform matroid `U(r, n)`.
    pub fn uniform(r: usize, n: usize) -> Self {
        let map = subsets(n, r)
            .into_iter()
            .map(|b| (b, TropicalValue::zero()))
            .collect();
        ValuatedMatroid(PlueckerVector::new(n, r, map).expect("uniform matroid is well formed"))
    }

    /// The trivial valuation on an arbitrary matroid.
    pub fn trivial(m: &Matroid) -> Self {
        let map = m
            .bases()
            .iter()
            .map(|b| (b.clone(), TropicalValue::zero()))
            .collect();
        ValuatedMatroid(
            PlueckerVector::new(m.n(), m.r(), map).expect("matroid bases are well formed"),
        )
    }

    pub fn vector(&self) -> &PlueckerVector {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn rank(&self) -> usize {
        self.0.r()
    }

    pub fn value(&self, b: &Subset) -> &TropicalValue {
        self.0.value(b)
    }

    /// The matroid whose bases are the finitely valued subsets.
    pub fn underlying_matroid(&self) -> Matroid {
        let bases = self
            .0
            .entries()
            .filter(|(_, v)| v.is_finite())
            .map(|(b, _)| b.clone())
            .collect();
        Matroid {
            n: self.n(),
            r: self.rank(),
            bases,
        }
    }

    /// The dual valuated matroid `μ*(I) = μ([n]∖I)`.
    pub fn dual(&self) -> ValuatedMatroid {
        let n = self.n();
        let map = self
            .0
            .entries()
            .map(|(b, v)| (b.complement(n), v.clone()))
            .collect();
        let pv = PlueckerVector::new(n, n - self.rank(), map).expect("dual vector is well formed");
        ValuatedMatroid::from_vector(pv).expect("dual of a valuated matroid is a valuated matroid")
    }

    /// Deletion `μ∖S`, on the ground set `[n]∖S` relabeled order-preservingly
    /// to `[n−|S|]`.
    ///
    /// The augmenting set `I ⊆ S` with `|I| = r−k` is chosen greedily in
    /// lexicographic order; the canonical normalization makes the result
    /// independent of that choice.
    pub fn deletion(&self, s: &Subset) -> Result<ValuatedMatroid> {
        if s.is_empty() {
            return Ok(self.clone());
        }
        let rest = s.complement(self.n());
        let underlying = self.underlying_matroid();
        let k = underlying.rank_of(&rest);
        if k == 0 {
            return Err(domain(format!(
                "deletion of {s} has rank zero (every remaining element is a loop)"
            )));
        }
        let mut augment = Subset::empty();
        if k < self.rank() {
            let mut current = rest.clone();
            for e in s.iter() {
                if augment.len() == self.rank() - k {
                    break;
                }
                let grown = current.with(e);
                if underlying.rank_of(&grown) > underlying.rank_of(&current) {
                    augment = augment.with(e);
                    current = grown;
                }
            }
            debug_assert_eq!(augment.len(), self.rank() - k);
        }
        // Relabel [n]∖S to [m] preserving order.
        let labels: Vec<usize> = rest.iter().collect();
        let m = labels.len();
        let map = subsets(m, k)
            .into_iter()
            .map(|b| {
                let original: Subset = b.iter().map(|i| labels[i - 1]).collect();
                let v = self.value(&original.union(&augment)).clone();
                (b, v)
            })
            .collect();
        let pv = PlueckerVector::new(m, k, map)?;
        ValuatedMatroid::from_vector(pv)
            .map_err(|e| crate::error::internal(format!("deletion not a valuated matroid: {e}")))
    }

    /// `μ_S`: the deletion `μ∖S` with the deleted elements re-added as
    /// loops, i.e. `(μ∖S) ⊕ U(0,|S|)` on the original ground set `[n]`.
    pub fn mu_s(&self, s: &Subset) -> Result<ValuatedMatroid> {
        if s.is_empty() {
            return Ok(self.clone());
        }
        let del = self.deletion(s)?;
        let rest = s.complement(self.n());
        let labels: Vec<usize> = rest.iter().collect();
        let position: BTreeMap<usize, usize> =
            labels.iter().enumerate().map(|(i, &e)| (e, i + 1)).collect();
        let k = del.rank();
        let map = subsets(self.n(), k)
            .into_iter()
            .filter(|b| b.intersection(s).is_empty())
            .map(|b| {
                let relabeled: Subset = b.iter().map(|e| position[&e]).collect();
                let v = del.value(&relabeled).clone();
                (b, v)
            })
            .collect();
        let pv = PlueckerVector::new(self.n(), k, map)?;
        ValuatedMatroid::from_vector(pv)
            .map_err(|e| crate::error::internal(format!("μ_S not a valuated matroid: {e}")))
    }

    /// Direct sum with a set of new loop elements. The labels must extend
    /// the ground set contiguously, i.e. be exactly `n+1, …, n+k`.
    pub fn direct_sum_with_loops(&self, labels: &[usize]) -> Result<ValuatedMatroid> {
        let mut sorted = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(usage("duplicate loop labels"));
        }
        if let Some(&e) = sorted.iter().find(|&&e| e <= self.n()) {
            return Err(usage(format!(
                "loop label {e} collides with the ground set [{}]",
                self.n()
            )));
        }
        let expected: Vec<usize> = (self.n() + 1..=self.n() + sorted.len()).collect();
        if sorted != expected {
            return Err(usage(format!(
                "loop labels must extend the ground set contiguously (expected {expected:?})"
            )));
        }
        let m = self.n() + sorted.len();
        let map = self
            .0
            .entries()
            .map(|(b, v)| (b.clone(), v.clone()))
            .collect();
        let pv = PlueckerVector::new(m, self.rank(), map)?;
        ValuatedMatroid::from_vector(pv)
            .map_err(|e| crate::error::internal(format!("loop sum not a valuated matroid: {e}")))
    }

    /// Adds the single extra element `o = n+1` as a loop.
    pub fn with_o_loop(&self) -> ValuatedMatroid {
        self.direct_sum_with_loops(&[self.n() + 1])
            .expect("appending one loop label cannot fail")
    }
}

impl fmt::Display for ValuatedMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An ordinary matroid given by its set of bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matroid {
    n: usize,
    r: usize,
    bases: BTreeSet<Subset>,
}

impl Matroid {
    pub fn new(n: usize, r: usize, bases: BTreeSet<Subset>) -> Result<Self> {
        if bases.is_empty() {
            return Err(usage("a matroid needs at least one basis"));
        }
        for b in &bases {
            if b.len() != r {
                return Err(usage(format!("basis {b} does not have cardinality {r}")));
            }
            if let Some(&e) = b.elements().iter().find(|&&e| e == 0 || e > n) {
                return Err(usage(format!("element {e} outside ground set [{n}]")));
            }
        }
        let m = Matroid { n, r, bases };
        match m.basis_exchange_violation() {
            None => Ok(m),
            Some((b1, b2, e)) => Err(domain(format!(
                "basis exchange fails for B1={b1}, B2={b2}, x={e}"
            ))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn bases(&self) -> &BTreeSet<Subset> {
        &self.bases
    }

    /// Brute-force check of the classical basis-exchange axiom.
    pub fn basis_exchange_violation(&self) -> Option<(Subset, Subset, usize)> {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for x in b1.minus(b2).iter() {
                    let ok = b2
                        .minus(b1)
                        .iter()
                        .any(|y| self.bases.contains(&b1.without(x).with(y)));
                    if !ok {
                        return Some((b1.clone(), b2.clone(), x));
                    }
                }
            }
        }
        None
    }

    /// Rank function `rk(A) = max over bases B of |A ∩ B|`.
    pub fn rank_of(&self, a: &Subset) -> usize {
        self.bases
            .iter()
            .map(|b| a.intersection(b).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| !b.contains(e))
    }

    pub fn loops(&self) -> Subset {
        (1..=self.n).filter(|&e| self.is_loop(e)).collect()
    }

    /// Classical dual: bases are the complements of bases.
    pub fn dual(&self) -> Matroid {
        Matroid {
            n: self.n,
            r: self.n - self.r,
            bases: self.bases.iter().map(|b| b.complement(self.n)).collect(),
        }
    }

    /// A flat is a rank-closed set: adding any outside element raises the
    /// rank. Enumerated brutally; meant for desk-scale ground sets.
    pub fn flats(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for k in 0..=self.n {
            for f in subsets(self.n, k) {
                let rk = self.rank_of(&f);
                let closed = (1..=self.n)
                    .filter(|&e| !f.contains(e))
                    .all(|e| self.rank_of(&f.with(e)) > rk);
                if closed {
                    out.push(f);
                }
            }
        }
        out
    }

    /// Circuits of the underlying matroid: minimal dependent sets.
    pub fn circuits(&self) -> Vec<Subset> {
        let independent = |a: &Subset| self.rank_of(a) == a.len();
        let mut out: Vec<Subset> = Vec::new();
        for k in 1..=self.n {
            for c in subsets(self.n, k) {
                if independent(&c) {
                    continue;
                }
                let minimal = c.iter().all(|e| independent(&c.without(e)));
                if minimal {
                    out.push(c);
                }
            }
        }
        out
    }
}

impl fmt::Display for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matroid(n={}, r={}, bases={{", self.n, self.r)?;
        for (i, b) in self.bases.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}})")
    }
}

/// Restriction `μ|_T = μ ∖ ([n]∖T)`, relabeled to `[|T|]`.
pub fn restriction(m: &ValuatedMatroid, t: &Subset) -> Result<ValuatedMatroid> {
    m.deletion(&t.complement(m.n()))
}

/// All matroids on `[n]` of rank `r`, by brute-force filtering of basis
/// families. Only sensible for very small `n`.
pub fn all_matroids(n: usize, r: usize) -> Vec<Matroid> {
    let all_bases = subsets(n, r);
    let mut out = Vec::new();
    // Iterate over nonempty subsets of the C(n,r) candidate basis sets.
    for mask in 1u64..(1u64 << all_bases.len()) {
        let bases: BTreeSet<Subset> = all_bases
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, b)| b.clone())
            .collect();
        let m = Matroid {
            n,
            r,
            bases,
        };
        if m.basis_exchange_violation().is_none() {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(n: usize, r: usize, dense: &[Option<i64>]) -> PlueckerVector {
        PlueckerVector::from_dense(n, r, dense).unwrap()
    }

    fn vm(n: usize, r: usize, dense: &[Option<i64>]) -> ValuatedMatroid {
        ValuatedMatroid::from_vector(pv(n, r, dense)).unwrap()
    }

    #[test]
    fn exchange_axiom_on_uniform() {
        let u24 = pv(4, 2, &[Some(0); 6]);
        assert!(u24.satisfies_exchange_axiom());
    }

    #[test]
    fn exchange_axiom_counterexample() {
        // (0,0,1,1,1,0) on (12,13,14,23,24,34): the three-term relation has
        // term values {0,1,2}, minimum once.
        let bad = pv(4, 2, &[Some(0), Some(0), Some(1), Some(1), Some(1), Some(0)]);
        let witness = bad.exchange_counterexample().expect("must fail");
        assert_eq!(
            witness,
            (Subset::new(vec![1, 2]), Subset::new(vec![3, 4]), 1)
        );
        // The witness is genuine: no j satisfies the inequality.
        let (i_set, j_set, i) = witness;
        let lhs = bad.value(&i_set).plus(bad.value(&j_set));
        for j in j_set.minus(&i_set).iter() {
            let rhs = bad
                .value(&i_set.without(i).with(j))
                .plus(bad.value(&j_set.without(j).with(i)));
            let violated = match (&lhs, &rhs) {
                (TropicalValue::Finite(l), TropicalValue::Finite(r)) => l < r,
                (TropicalValue::Finite(_), TropicalValue::Infinity) => true,
                (TropicalValue::Infinity, _) => false,
            };
            assert!(violated, "j={j} should not repair the witness");
        }
    }

    #[test]
    fn exchange_axiom_with_tie() {
        // (1,0,0,0,0,1): term values 2, 0, 0 — minimum twice, full check passes.
        let good = pv(4, 2, &[Some(1), Some(0), Some(0), Some(0), Some(0), Some(1)]);
        assert!(good.satisfies_exchange_axiom());
    }

    #[test]
    fn underlying_matroid_examples() {
        let u = ValuatedMatroid::uniform(2, 4);
        assert_eq!(u.underlying_matroid().bases().len(), 6);

        // ∞ exactly on bases containing element 1: element 1 is a loop.
        let loopy = vm(4, 2, &[None, None, None, Some(0), Some(0), Some(0)]);
        let m = loopy.underlying_matroid();
        assert_eq!(m.bases().len(), 3);
        assert!(m.is_loop(1));

        // The tropicalized counterexample vector (a,a,0,b,0,0) has no ∞.
        let a2 = vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]);
        assert_eq!(a2.underlying_matroid().bases().len(), 6);
    }

    #[test]
    fn dual_examples() {
        let u24 = ValuatedMatroid::uniform(2, 4);
        assert_eq!(u24.dual(), u24);
        assert_eq!(ValuatedMatroid::uniform(1, 4).dual(), ValuatedMatroid::uniform(3, 4));

        let a2 = vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]);
        let expected = vm(4, 2, &[Some(0), Some(0), Some(2), Some(0), Some(1), Some(1)]);
        assert_eq!(a2.dual(), expected);
        assert_eq!(a2.dual().dual(), a2);
    }

    #[test]
    fn deletion_examples() {
        let u24 = ValuatedMatroid::uniform(2, 4);
        let s1 = Subset::new(vec![1]);
        assert_eq!(u24.deletion(&s1).unwrap(), ValuatedMatroid::uniform(2, 3));
        assert_eq!(u24.deletion(&Subset::empty()).unwrap(), u24);

        let v = vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]);
        // Restriction to {2,3,4}, relabeled {1,2,3}: values (2,0,0).
        let del = v.deletion(&s1).unwrap();
        assert_eq!(del, vm(3, 2, &[Some(2), Some(0), Some(0)]));
    }

    #[test]
    fn deletion_rank_zero_is_an_error() {
        let loopy = vm(3, 1, &[Some(0), None, None]);
        // Removing element 1 leaves only loops.
        assert!(loopy.deletion(&Subset::new(vec![1])).is_err());
    }

    #[test]
    fn deletion_with_augmentation() {
        // Element 4 is a coloop of U(1,1)⊕…: bases {14,24,34}; deleting {4}
        // needs the augmenting set I = {4}.
        let v = vm(4, 2, &[None, None, Some(0), None, Some(1), Some(2)]);
        let del = v.deletion(&Subset::new(vec![4])).unwrap();
        assert_eq!(del.rank(), 1);
        assert_eq!(del, vm(3, 1, &[Some(0), Some(1), Some(2)]));
    }

    #[test]
    fn mu_s_examples() {
        let u24 = ValuatedMatroid::uniform(2, 4);
        let s1 = Subset::new(vec![1]);
        let m = u24.mu_s(&s1).unwrap();
        assert_eq!(m, vm(4, 2, &[None, None, None, Some(0), Some(0), Some(0)]));
        assert_eq!(u24.mu_s(&Subset::empty()).unwrap(), u24);

        let v = vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]);
        let ms = v.mu_s(&s1).unwrap();
        assert_eq!(ms, vm(4, 2, &[None, None, None, Some(2), Some(0), Some(0)]));
        assert!(ms.underlying_matroid().is_loop(1));
    }

    #[test]
    fn loops_direct_sum() {
        let u12 = ValuatedMatroid::uniform(1, 2);
        let with_o = u12.direct_sum_with_loops(&[3]).unwrap();
        assert_eq!(with_o, vm(3, 1, &[Some(0), Some(0), None]));
        assert_eq!(u12.direct_sum_with_loops(&[]).unwrap(), u12);

        let u24 = ValuatedMatroid::uniform(2, 4);
        let bigger = u24.with_o_loop();
        assert_eq!(bigger.n(), 5);
        assert!(bigger.underlying_matroid().is_loop(5));

        assert!(u12.direct_sum_with_loops(&[2]).is_err());
        assert!(u12.direct_sum_with_loops(&[4]).is_err());
        assert!(u12.direct_sum_with_loops(&[3, 3]).is_err());
    }

    #[test]
    fn matroid_rank_and_flats() {
        let m = ValuatedMatroid::uniform(2, 4).underlying_matroid();
        assert_eq!(m.rank_of(&Subset::new(vec![1])), 1);
        assert_eq!(m.rank_of(&Subset::new(vec![1, 2, 3])), 2);
        // Flats of U(2,4): ∅, singletons, [4].
        assert_eq!(m.flats().len(), 6);
        assert_eq!(m.dual().r(), 2);
    }

    #[test]
    fn all_matroids_small_counts() {
        // On [3]: rank-1 matroids are the 7 nonempty subsets of singleton
        // bases; rank 2 has 7 as well (complements by duality).
        assert_eq!(all_matroids(3, 1).len(), 7);
        assert_eq!(all_matroids(3, 2).len(), 7);
        assert_eq!(all_matroids(3, 3).len(), 1);
        for m in all_matroids(4, 2) {
            assert!(m.basis_exchange_violation().is_none());
        }
    }

    #[test]
    fn deletion_composes() {
        let v = vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]);
        let s12 = Subset::new(vec![1, 2]);
        let once = v.deletion(&s12).unwrap();
        // Deleting {1} then {1} again (element 2 relabels to 1).
        let twice = v
            .deletion(&Subset::new(vec![1]))
            .unwrap()
            .deletion(&Subset::new(vec![1]))
            .unwrap();
        assert_eq!(once, twice);
    }
}
