//! The tropical semifield `𝕋 = ℚ ∪ {∞}` with `⊕ = min` and `⊙ = +`,
//! points of tropical projective space, and the "minimum achieved at
//! least twice" evaluation semantics.
//!
//! Two conventions are fixed once and for all:
//!
//! * min-convention everywhere; `∞` is neutral for `⊕` and absorbing
//!   for `⊙`;
//! * whenever the minimum of a family of terms is `∞`, it counts as
//!   achieved at least twice, even for a single term.
//!
//! Points are stored in a canonical representative of their `ℝ𝟏`-class:
//! the minimum finite coordinate is `0`, so projective equality is plain
//! structural equality.

use std::fmt;

use crate::error::{domain, usage, Result};
use crate::rat::{format_rat, Rat};

/// An element of the tropical semifield: a rational number or `∞`.
///
/// The derived `Ord` places `Infinity` above every finite value, which is
/// exactly the tropical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TropicalValue {
    Finite(Rat),
    Infinity,
}

use TropicalValue::{Finite, Infinity};

impl TropicalValue {
    pub fn zero() -> Self {
        Finite(Rat::default())
    }

    pub fn from_int(n: i64) -> Self {
        Finite(crate::rat::rat(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Finite(r) => Some(r),
            Infinity => None,
        }
    }

    /// Tropical addition `a ⊕ b = min(a, b)`.
    pub fn min_with(&self, other: &Self) -> Self {
        std::cmp::min(self, other).clone()
    }

    /// Tropical multiplication `a ⊙ b = a + b`; `∞` is absorbing.
    pub fn plus(&self, other: &Self) -> Self {
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinity,
        }
    }

    /// Subtracts a finite rational; `∞` stays `∞`.
    pub fn shift(&self, by: &Rat) -> Self {
        match self {
            Finite(a) => Finite(a - by),
            Infinity => Infinity,
        }
    }
}

impl fmt::Display for TropicalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finite(r) => write!(f, "{}", format_rat(r)),
            Infinity => write!(f, "inf"),
        }
    }
}

/// True iff the minimum of the terms occurs at two or more positions, or
/// the minimum itself is `∞` (in which case it counts as achieved at
/// least twice regardless of arity).
pub fn min_achieved_twice(terms: &[TropicalValue]) -> Result<bool> {
    let min = terms
        .iter()
        .min()
        .ok_or_else(|| usage("minimum of an empty term list"))?;
    if *min == Infinity {
        return Ok(true);
    }
    Ok(terms.iter().filter(|t| *t == min).count() >= 2)
}

/// A point of tropical projective space `ℙ(𝕋ⁿ)`, stored canonically:
/// at least one coordinate is finite and the minimum finite coordinate
/// is zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TropicalPoint {
    coords: Vec<TropicalValue>,
}

impl TropicalPoint {
    /// Normalizes a raw coordinate vector to its canonical representative.
    ///
    /// Fails on the all-`∞` vector, which is not a point of `ℙ(𝕋ⁿ)`.
    pub fn new(coords: Vec<TropicalValue>) -> Result<Self> {
        let min = coords
            .iter()
            .filter_map(TropicalValue::as_rat)
            .min()
            .ok_or_else(|| domain("not a point of tropical projective space: all coordinates are infinite"))?
            .clone();
        let coords = coords.iter().map(|c| c.shift(&min)).collect();
        Ok(TropicalPoint { coords })
    }

    pub fn from_ints(coords: &[Option<i64>]) -> Result<Self> {
        TropicalPoint::new(
            coords
                .iter()
                .map(|c| c.map_or(Infinity, TropicalValue::from_int))
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[TropicalValue] {
        &self.coords
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> &TropicalValue {
        &self.coords[i - 1]
    }

    /// Support: the set of indices with finite coordinate.
    pub fn support(&self) -> crate::sets::Subset {
        (1..=self.n()).filter(|&i| self.coord(i).is_finite()).collect()
    }

    /// Coordinatewise tropical sum `λ ⊙ self ⊕ …` building block: returns
    /// the raw vector `λ + coords` without renormalizing.
    pub fn scaled(&self, lambda: &TropicalValue) -> Vec<TropicalValue> {
        self.coords.iter().map(|c| c.plus(lambda)).collect()
    }
}

impl fmt::Display for TropicalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A tropical linear form `⊕ᵢ Cᵢ ⊙ xᵢ`, e.g. a valuated circuit read as
/// coefficients. Not all coefficients may be `∞`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TropicalLinearForm {
    coefficients: Vec<TropicalValue>,
}

impl TropicalLinearForm {
    pub fn new(coefficients: Vec<TropicalValue>) -> Result<Self> {
        if !coefficients.iter().any(TropicalValue::is_finite) {
            return Err(domain("tropical linear form with all coefficients infinite"));
        }
        Ok(TropicalLinearForm { coefficients })
    }

    pub fn n(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[TropicalValue] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> &TropicalValue {
        &self.coefficients[i - 1]
    }
}

/// Evaluates the form at a point: true iff `min_i { C_i + x_i }` is
/// achieved at least twice (with the `∞` convention).
pub fn form_evaluate_twice(form: &TropicalLinearForm, x: &TropicalPoint) -> Result<bool> {
    if form.n() != x.n() {
        return Err(usage(format!(
            "dimension mismatch: form on {} coordinates, point on {}",
            form.n(),
            x.n()
        )));
    }
    let terms: Vec<TropicalValue> = form
        .coefficients()
        .iter()
        .zip(x.coords())
        .map(|(c, v)| c.plus(v))
        .collect();
    min_achieved_twice(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use proptest::prelude::*;

    fn tv(v: Option<i64>) -> TropicalValue {
        v.map_or(Infinity, TropicalValue::from_int)
    }

    fn vals(v: &[Option<i64>]) -> Vec<TropicalValue> {
        v.iter().copied().map(tv).collect()
    }

    #[test]
    fn min_twice_cases() {
        assert!(min_achieved_twice(&vals(&[Some(0), Some(0), Some(5)])).unwrap());
        assert!(!min_achieved_twice(&vals(&[Some(0), Some(1), Some(2)])).unwrap());
        // By convention the minimum ∞ is achieved at least twice, even for
        // a single term.
        assert!(min_achieved_twice(&vals(&[None, None])).unwrap());
        assert!(min_achieved_twice(&vals(&[None])).unwrap());
        assert!(min_achieved_twice(&[]).is_err());
    }

    #[test]
    fn normalize_examples() {
        let p = TropicalPoint::from_ints(&[Some(3), Some(5), None, Some(3)]).unwrap();
        assert_eq!(p, TropicalPoint::from_ints(&[Some(0), Some(2), None, Some(0)]).unwrap());

        let q = TropicalPoint::from_ints(&[Some(0), Some(0), Some(0), Some(0)]).unwrap();
        assert_eq!(q.coords(), vals(&[Some(0); 4]).as_slice());

        let r = TropicalPoint::from_ints(&[None, Some(7), None, Some(9)]).unwrap();
        assert_eq!(r, TropicalPoint::from_ints(&[None, Some(0), None, Some(2)]).unwrap());

        assert!(TropicalPoint::from_ints(&[None, None]).is_err());
    }

    #[test]
    fn form_evaluation_examples() {
        let f = TropicalLinearForm::new(vals(&[Some(0), Some(0), Some(0), None])).unwrap();
        let x = TropicalPoint::from_ints(&[Some(0), Some(0), Some(0), Some(0)]).unwrap();
        assert!(form_evaluate_twice(&f, &x).unwrap());

        // Terms {∞, 0, ∞, 5}: minimum achieved once.
        let f = TropicalLinearForm::new(vals(&[Some(0), Some(0), None, Some(0)])).unwrap();
        let x = TropicalPoint::from_ints(&[None, Some(0), Some(0), Some(5)]).unwrap();
        assert!(!form_evaluate_twice(&f, &x).unwrap());

        // A single finite term is a unique minimum …
        let f = TropicalLinearForm::new(vals(&[Some(0), None, None, None])).unwrap();
        let x = TropicalPoint::from_ints(&[Some(0), Some(0), Some(0), Some(0)]).unwrap();
        assert!(!form_evaluate_twice(&f, &x).unwrap());
        // … but an ∞ minimum triggers the convention.
        let x = TropicalPoint::from_ints(&[None, Some(0), Some(0), Some(0)]).unwrap();
        assert!(form_evaluate_twice(&f, &x).unwrap());

        let short = TropicalPoint::from_ints(&[Some(0), Some(0)]).unwrap();
        assert!(form_evaluate_twice(&f, &short).is_err());
    }

    fn arb_value() -> impl Strategy<Value = TropicalValue> {
        prop_oneof![
            4 => (-20i64..20, 1i64..6).prop_map(|(p, q)| Finite(Rat::new(p.into(), q.into()))),
            1 => Just(Infinity),
        ]
    }

    proptest! {
        #[test]
        fn semifield_laws(a in arb_value(), b in arb_value(), c in arb_value()) {
            prop_assert_eq!(a.min_with(&b), b.min_with(&a));
            prop_assert_eq!(a.plus(&b), b.plus(&a));
            prop_assert_eq!(a.min_with(&b).min_with(&c), a.min_with(&b.min_with(&c)));
            prop_assert_eq!(a.plus(&b).plus(&c), a.plus(&b.plus(&c)));
            // distributivity: a ⊙ (b ⊕ c) = (a ⊙ b) ⊕ (a ⊙ c)
            prop_assert_eq!(a.plus(&b.min_with(&c)), a.plus(&b).min_with(&a.plus(&c)));
            // ∞ is neutral for ⊕ and absorbing for ⊙
            prop_assert_eq!(a.min_with(&Infinity), a.clone());
            prop_assert_eq!(a.plus(&Infinity), Infinity);
        }

        #[test]
        fn normalize_is_shift_invariant(
            raw in proptest::collection::vec(arb_value(), 1..6),
            shift in -20i64..20,
        ) {
            prop_assume!(raw.iter().any(TropicalValue::is_finite));
            let shifted: Vec<_> = raw
                .iter()
                .map(|v| v.plus(&TropicalValue::from_int(shift)))
                .collect();
            let p = TropicalPoint::new(raw).unwrap();
            let q = TropicalPoint::new(shifted).unwrap();
            prop_assert_eq!(&p, &q);
            // idempotence
            let again = TropicalPoint::new(p.coords().to_vec()).unwrap();
            prop_assert_eq!(again, p);
        }

        #[test]
        fn min_twice_invariance(
            terms in proptest::collection::vec(arb_value(), 1..6),
            shift in -20i64..20,
            seed in 0usize..64,
        ) {
            let base = min_achieved_twice(&terms).unwrap();
            let shifted: Vec<_> = terms
                .iter()
                .map(|v| v.plus(&TropicalValue::from_int(shift)))
                .collect();
            prop_assert_eq!(min_achieved_twice(&shifted).unwrap(), base);
            let mut permuted = terms.clone();
            permuted.rotate_left(seed % terms.len());
            prop_assert_eq!(min_achieved_twice(&permuted).unwrap(), base);
        }
    }

    #[test]
    fn value_display() {
        assert_eq!(tv(Some(3)).to_string(), "3");
        assert_eq!(Infinity.to_string(), "inf");
        assert_eq!(Finite(rat(-2) / rat(4)).to_string(), "-1/2");
    }
}
