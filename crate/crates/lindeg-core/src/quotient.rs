//! Valuated matroid quotients, flag predicates, induced matroids along
//! set maps, and the four-way equivalence report.
//!
//! `μ ↞ ν` (μ of rank r is a quotient of ν of rank s ≥ r) holds when for
//! every `I ∈ C(n,r)`, `J ∈ C(n,s)` and `i ∈ I∖J` there is `j ∈ J∖I`
//! with
//!
//! ```text
//! μ(I) + ν(J) ≥ μ(I∪j∖i) + ν(J∪i∖j).
//! ```
//!
//! A sequence `(μ_1, …, μ_k)` with degeneration sets `(S_1, …, S_{k−1})`
//! is a linear degenerate valuated flag matroid when `(μ_i)_{S_i} ↞
//! μ_{i+1}` for every consecutive step. The same data can be tested four
//! ways — Dressian membership, the quotient condition, containment of
//! projected tropical linear spaces, and projection maps being morphisms
//! of valuated matroids — and the four answers always coincide; a
//! disagreement is a library bug, never a valid state.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{internal, usage, Result};
use crate::matroid::{restriction, PlueckerVector, ValuatedMatroid};
use crate::relations::{ld_flag_dressian_member, DegenerationType, PairMode};
use crate::sets::{subsets, Subset};
use crate::spaces::projection_containment_witness;
use crate::trop::TropicalValue;

/// A map of sets `[m] ∪ {o} → [n] ∪ {o}` with `f(o) = o`. The zero
/// element `o` is represented internally as `m+1` (resp. `n+1`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetMapWithZero {
    m: usize,
    n: usize,
    /// Image of `1..=m`; entries are in `1..=n` or `n+1` for `o`.
    images: Vec<usize>,
}

impl SetMapWithZero {
    pub fn new(m: usize, n: usize, images: Vec<usize>) -> Result<Self> {
        if images.len() != m {
            return Err(usage(format!("expected {m} images, got {}", images.len())));
        }
        if let Some(&bad) = images.iter().find(|&&v| v == 0 || v > n + 1) {
            return Err(usage(format!("image {bad} outside [n]∪{{o}} with n={n}")));
        }
        Ok(SetMapWithZero { m, n, images })
    }

    /// The projection `pr_S`: `x ↦ o` for `x ∈ S`, identity otherwise.
    pub fn projection(s: &Subset, n: usize) -> Self {
        let images = (1..=n).map(|x| if s.contains(x) { n + 1 } else { x }).collect();
        SetMapWithZero { m: n, n, images }
    }

    pub fn source_size(&self) -> usize {
        self.m
    }

    pub fn target_size(&self) -> usize {
        self.n
    }

    /// Image of a source element, with `o = m+1 ↦ o = n+1`.
    pub fn image(&self, x: usize) -> usize {
        if x == self.m + 1 {
            self.n + 1
        } else {
            self.images[x - 1]
        }
    }

    /// The same map viewed on the extended ground sets `[m+1] → [n+1]`.
    fn extended_images(&self) -> Vec<usize> {
        let mut v = self.images.clone();
        v.push(self.n + 1);
        v
    }
}

impl fmt::Display for SetMapWithZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_el = |x: usize, bound: usize| {
            if x == bound + 1 {
                "o".to_string()
            } else {
                x.to_string()
            }
        };
        write!(f, "{{")?;
        for x in 1..=self.m + 1 {
            if x > 1 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{}", fmt_el(x, self.m), fmt_el(self.image(x), self.n))?;
        }
        write!(f, "}}")
    }
}

/// Witness of a failed quotient check: the lexicographically first
/// `(I, J, i)` with no repairing `j`.
pub type QuotientWitness = (Subset, Subset, usize);

/// The valuated matroid quotient test `mu ↞ nu`.
pub fn quotient_check(mu: &ValuatedMatroid, nu: &ValuatedMatroid) -> Result<bool> {
    Ok(quotient_witness(mu, nu)?.is_none())
}

/// Like [`quotient_check`] but returns the first failing triple.
pub fn quotient_witness(
    mu: &ValuatedMatroid,
    nu: &ValuatedMatroid,
) -> Result<Option<QuotientWitness>> {
    if mu.n() != nu.n() {
        return Err(usage("quotient check requires a common ground set"));
    }
    if mu.rank() > nu.rank() {
        return Err(usage(format!(
            "quotient requires rank {} ≤ rank {}",
            mu.rank(),
            nu.rank()
        )));
    }
    for i_set in subsets(mu.n(), mu.rank()) {
        for j_set in subsets(nu.n(), nu.rank()) {
            let lhs = mu.value(&i_set).plus(nu.value(&j_set));
            if !lhs.is_finite() {
                continue;
            }
            for i in i_set.minus(&j_set).iter() {
                let ok = j_set.minus(&i_set).iter().any(|j| {
                    let rhs = mu
                        .value(&i_set.with(j).without(i))
                        .plus(nu.value(&j_set.with(i).without(j)));
                    match (&lhs, &rhs) {
                        (TropicalValue::Infinity, _) => true,
                        (TropicalValue::Finite(_), TropicalValue::Infinity) => false,
                        (TropicalValue::Finite(l), TropicalValue::Finite(r)) => l >= r,
                    }
                });
                if !ok {
                    return Ok(Some((i_set.clone(), j_set.clone(), i)));
                }
            }
        }
    }
    Ok(None)
}

/// A sequence of valuated matroids on a common ground set, together with
/// its degeneration type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlagInstance {
    matroids: Vec<ValuatedMatroid>,
    dt: DegenerationType,
}

impl FlagInstance {
    pub fn new(matroids: Vec<ValuatedMatroid>, dt: DegenerationType) -> Result<Self> {
        if matroids.len() != dt.steps() {
            return Err(usage(format!(
                "{} matroids for {} ranks",
                matroids.len(),
                dt.steps()
            )));
        }
        for (m, &r) in matroids.iter().zip(dt.ranks()) {
            if m.n() != dt.n() || m.rank() != r {
                return Err(usage(format!(
                    "matroid of rank {} on [{}] does not match declared rank {r} on [{}]",
                    m.rank(),
                    m.n(),
                    dt.n()
                )));
            }
        }
        Ok(FlagInstance { matroids, dt })
    }

    pub fn matroids(&self) -> &[ValuatedMatroid] {
        &self.matroids
    }

    pub fn dt(&self) -> &DegenerationType {
        &self.dt
    }

    pub fn vectors(&self) -> Vec<PlueckerVector> {
        self.matroids.iter().map(|m| m.vector().clone()).collect()
    }
}

/// Consecutive quotient condition `(μ_i)_{S_i} ↞ μ_{i+1}`, with the first
/// failing step on failure.
pub fn is_ld_flag_matroid(fi: &FlagInstance) -> Result<(bool, Option<String>)> {
    for i in 0..fi.matroids.len().saturating_sub(1) {
        let s = &fi.dt.sets()[i];
        let projected = fi.matroids[i]
            .mu_s(s)
            .map_err(|e| usage(format!("step {}: {e}", i + 1)))?;
        if let Some((iw, jw, el)) = quotient_witness(&projected, &fi.matroids[i + 1])? {
            return Ok((
                false,
                Some(format!(
                    "step {}: (μ_{})_{{{}}} ↞ μ_{} fails at I={iw}, J={jw}, i={el}",
                    i + 1,
                    i + 1,
                    s.label(),
                    i + 2
                )),
            ));
        }
    }
    Ok((true, None))
}

/// The valuated matroid induced along a set map: `f⁻¹(ν)(I) = ν(f(I))`
/// when `f` is injective on `I` and `f(I)` is a basis of the restriction
/// of `ν` to the image of `f`, and `∞` otherwise.
pub fn induced_valuated_matroid(
    images: &[usize],
    m: usize,
    nu: &ValuatedMatroid,
) -> Result<ValuatedMatroid> {
    if images.len() != m {
        return Err(usage(format!("expected {m} images, got {}", images.len())));
    }
    if let Some(&bad) = images.iter().find(|&&v| v == 0 || v > nu.n()) {
        return Err(usage(format!("image {bad} outside ground set [{}]", nu.n())));
    }
    let image_set: Subset = images.iter().copied().collect();
    let restricted = restriction(nu, &image_set)
        .map_err(|_| crate::error::domain("the image of the map has rank zero"))?;
    // Positions of image elements inside the relabeled restriction.
    let position: BTreeMap<usize, usize> = image_set
        .iter()
        .enumerate()
        .map(|(idx, e)| (e, idx + 1))
        .collect();
    let k = restricted.rank();
    let map = subsets(m, k)
        .into_iter()
        .filter_map(|b| {
            let mapped: Subset = b.iter().map(|x| images[x - 1]).collect();
            if mapped.len() != b.len() {
                return None; // f not injective on b ⇒ value ∞
            }
            let relabeled: Subset = mapped.iter().map(|e| position[&e]).collect();
            let v = restricted.value(&relabeled).clone();
            v.is_finite().then_some((b, v))
        })
        .collect();
    let pv = PlueckerVector::new(m, k, map)
        .map_err(|_| crate::error::domain("induced matroid has no basis"))?;
    ValuatedMatroid::from_vector(pv)
        .map_err(|e| internal(format!("induced map is not a valuated matroid: {e}")))
}

/// Tests whether `f : ν → μ` is a morphism of valuated matroids, i.e.
/// whether `f⁻¹(μ_o) ↞ ν_o` after adjoining the zero element `o` as a
/// loop on both sides.
pub fn morphism_check(
    f: &SetMapWithZero,
    nu_source: &ValuatedMatroid,
    mu_target: &ValuatedMatroid,
) -> Result<bool> {
    Ok(morphism_witness(f, nu_source, mu_target)?.is_none())
}

/// Witness version of [`morphism_check`]; `Some` describes the failure.
pub fn morphism_witness(
    f: &SetMapWithZero,
    nu_source: &ValuatedMatroid,
    mu_target: &ValuatedMatroid,
) -> Result<Option<String>> {
    if f.source_size() != nu_source.n() || f.target_size() != mu_target.n() {
        return Err(usage("set map sizes do not match the matroids"));
    }
    let mu_o = mu_target.with_o_loop();
    let nu_o = nu_source.with_o_loop();
    let induced = induced_valuated_matroid(&f.extended_images(), nu_source.n() + 1, &mu_o)?;
    if induced.rank() > nu_o.rank() {
        // The induced matroid outranks the source: no quotient is possible.
        return Ok(Some(format!(
            "induced matroid has rank {} > {}",
            induced.rank(),
            nu_o.rank()
        )));
    }
    Ok(quotient_witness(&induced, &nu_o)?
        .map(|(i, j, e)| format!("f⁻¹(μ_o) ↞ ν_o fails at I={i}, J={j}, i={e}")))
}

/// The four equivalent predicates evaluated independently.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoremAReport {
    /// (a) membership in the linear degenerate flag Dressian.
    pub dressian: bool,
    /// (b) consecutive quotients `(μ_i)_{S_i} ↞ μ_{i+1}`.
    pub ld_flag_matroid: bool,
    /// (c) containment `pr_{S_i}(trop(μ_i)) ⊆ trop(μ_{i+1})`.
    pub projection_containment: bool,
    /// (d) every `pr_{S_i} : μ_{i+1} → μ_i` a morphism.
    pub morphisms: bool,
    /// First failure description per predicate, when any.
    pub witnesses: Vec<String>,
}

impl TheoremAReport {
    pub fn agree(&self) -> bool {
        self.dressian == self.ld_flag_matroid
            && self.dressian == self.projection_containment
            && self.dressian == self.morphisms
    }

    pub fn member(&self) -> bool {
        self.dressian
    }
}

/// Evaluates the four predicates of the equivalence on a flag instance
/// through four independent code paths.
pub fn theorem_a_report(fi: &FlagInstance) -> Result<TheoremAReport> {
    let mut witnesses = Vec::new();

    let membership = ld_flag_dressian_member(&fi.vectors(), fi.dt(), PairMode::AllPairs)?;
    if let Some(first) = membership.failures.first() {
        witnesses.push(format!(
            "(a) {} fails {}",
            first.block,
            first.relation.text()
        ));
    }

    let (is_flag, flag_witness) = is_ld_flag_matroid(fi)?;
    if let Some(w) = flag_witness {
        witnesses.push(format!("(b) {w}"));
    }

    let mut containment = true;
    for i in 0..fi.matroids().len().saturating_sub(1) {
        let s = &fi.dt().sets()[i];
        if let Some(w) =
            projection_containment_witness(&fi.matroids()[i], &fi.matroids()[i + 1], s)?
        {
            containment = false;
            witnesses.push(format!(
                "(c) step {}: pr_{{{}}}({}) escapes trop(μ_{})",
                i + 1,
                s.label(),
                w.cocircuit,
                i + 2
            ));
            break;
        }
    }

    let mut morphisms = true;
    for i in 0..fi.matroids().len().saturating_sub(1) {
        let s = &fi.dt().sets()[i];
        let f = SetMapWithZero::projection(s, fi.dt().n());
        if let Some(w) = morphism_witness(&f, &fi.matroids()[i + 1], &fi.matroids()[i])? {
            morphisms = false;
            witnesses.push(format!("(d) step {}: {w}", i + 1));
            break;
        }
    }

    Ok(TheoremAReport {
        dressian: membership.member,
        ld_flag_matroid: is_flag,
        projection_containment: containment,
        morphisms,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{Matroid, PlueckerVector};

    fn vm(n: usize, r: usize, dense: &[Option<i64>]) -> ValuatedMatroid {
        ValuatedMatroid::from_vector(PlueckerVector::from_dense(n, r, dense).unwrap()).unwrap()
    }

    fn counterexample_pair() -> (ValuatedMatroid, ValuatedMatroid) {
        (
            ValuatedMatroid::uniform(1, 4),
            vm(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), Some(0)]),
        )
    }

    #[test]
    fn quotient_basics() {
        let u14 = ValuatedMatroid::uniform(1, 4);
        let u24 = ValuatedMatroid::uniform(2, 4);
        assert!(quotient_check(&u14, &u24).unwrap());
        assert!(quotient_check(&u24, &u24).unwrap());
        assert!(quotient_check(&u24, &u14).is_err());
    }

    #[test]
    fn counterexample_quotients() {
        let (mu, nu) = counterexample_pair();
        // The undegenerate pair is a flag …
        assert!(quotient_check(&mu, &nu).unwrap());
        // … but projecting away coordinate 1 breaks it.
        let ms = mu.mu_s(&Subset::new(vec![1])).unwrap();
        let witness = quotient_witness(&ms, &nu).unwrap();
        assert!(witness.is_some());
    }

    #[test]
    fn flag_predicates() {
        let flag = FlagInstance::new(
            vec![
                ValuatedMatroid::uniform(1, 4),
                ValuatedMatroid::uniform(2, 4),
                ValuatedMatroid::uniform(3, 4),
            ],
            DegenerationType::new(4, vec![1, 2, 3], vec![Subset::empty(), Subset::empty()])
                .unwrap(),
        )
        .unwrap();
        assert!(is_ld_flag_matroid(&flag).unwrap().0);

        let degenerate = FlagInstance::new(
            flag.matroids().to_vec(),
            DegenerationType::new(
                4,
                vec![1, 2, 3],
                vec![Subset::new(vec![1]), Subset::new(vec![1])],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(is_ld_flag_matroid(&degenerate).unwrap().0);

        let (mu, nu) = counterexample_pair();
        let broken = FlagInstance::new(
            vec![mu, nu],
            DegenerationType::new(4, vec![1, 2], vec![Subset::new(vec![1])]).unwrap(),
        )
        .unwrap();
        let (ok, witness) = is_ld_flag_matroid(&broken).unwrap();
        assert!(!ok);
        assert!(witness.unwrap().starts_with("step 1"));
    }

    #[test]
    fn induced_identity_and_collapse() {
        let u24 = ValuatedMatroid::uniform(2, 4);
        let id: Vec<usize> = (1..=4).collect();
        assert_eq!(induced_valuated_matroid(&id, 4, &u24).unwrap(), u24);

        // f collapsing {1,2} → 1, {3} → 2 against U(2,2): bases {13, 23}.
        let u22 = ValuatedMatroid::uniform(2, 2);
        let induced = induced_valuated_matroid(&[1, 1, 2], 3, &u22).unwrap();
        assert_eq!(induced, vm(3, 2, &[None, Some(0), Some(0)]));
    }

    #[test]
    fn induced_projection_is_mu_s() {
        // pr_{1}⁻¹((U(2,4))_o) = ((U(2,4))_o)_{1}.
        let u24 = ValuatedMatroid::uniform(2, 4);
        let mu_o = u24.with_o_loop();
        let f = SetMapWithZero::projection(&Subset::new(vec![1]), 4);
        let induced = induced_valuated_matroid(&f.extended_images(), 5, &mu_o).unwrap();
        let direct = mu_o.mu_s(&Subset::new(vec![1])).unwrap();
        assert_eq!(induced, direct);
        assert!(induced.underlying_matroid().is_loop(1));
        assert!(induced.underlying_matroid().is_loop(5));
    }

    #[test]
    fn induced_rank_zero_image_errors() {
        // ν has a loop at 1; mapping everything to 1 leaves no basis.
        let bases = [Subset::new(vec![2])].into_iter().collect();
        let m = Matroid::new(2, 1, bases).unwrap();
        let nu = ValuatedMatroid::trivial(&m);
        assert!(induced_valuated_matroid(&[1, 1], 2, &nu).is_err());
    }

    #[test]
    fn morphism_examples() {
        let u14 = ValuatedMatroid::uniform(1, 4);
        let u24 = ValuatedMatroid::uniform(2, 4);

        // pr_∅ is the identity: the morphism condition is the plain quotient.
        let id = SetMapWithZero::projection(&Subset::empty(), 4);
        assert!(morphism_check(&id, &u24, &u14).unwrap());
        assert_eq!(
            morphism_check(&id, &u24, &u14).unwrap(),
            quotient_check(&u14, &u24).unwrap()
        );

        // pr_{1}: U(2,4) → U(1,4) is a morphism.
        let pr1 = SetMapWithZero::projection(&Subset::new(vec![1]), 4);
        assert!(morphism_check(&pr1, &u24, &u14).unwrap());

        // On the counterexample pair it is not.
        let (mu, nu) = counterexample_pair();
        assert!(!morphism_check(&pr1, &nu, &mu).unwrap());
    }

    #[test]
    fn morphism_matches_mu_s_quotient() {
        // pr_S a morphism ⟺ μ_S ↞ ν, across several S.
        let (mu, nu) = counterexample_pair();
        for s in [
            Subset::empty(),
            Subset::new(vec![1]),
            Subset::new(vec![2]),
            Subset::new(vec![1, 2]),
            Subset::new(vec![3, 4]),
        ] {
            let f = SetMapWithZero::projection(&s, 4);
            let lhs = morphism_check(&f, &nu, &mu).unwrap();
            let rhs = quotient_check(&mu.mu_s(&s).unwrap(), &nu).unwrap();
            assert_eq!(lhs, rhs, "S = {s}");
        }
    }

    #[test]
    fn theorem_a_uniform_flag() {
        let fi = FlagInstance::new(
            vec![ValuatedMatroid::uniform(1, 4), ValuatedMatroid::uniform(2, 4)],
            DegenerationType::new(4, vec![1, 2], vec![Subset::new(vec![1])]).unwrap(),
        )
        .unwrap();
        let report = theorem_a_report(&fi).unwrap();
        assert!(report.agree());
        assert!(report.member());
    }

    #[test]
    fn theorem_a_counterexample() {
        let (mu, nu) = counterexample_pair();
        let with_s = FlagInstance::new(
            vec![mu.clone(), nu.clone()],
            DegenerationType::new(4, vec![1, 2], vec![Subset::new(vec![1])]).unwrap(),
        )
        .unwrap();
        let report = theorem_a_report(&with_s).unwrap();
        assert!(report.agree(), "witnesses: {:?}", report.witnesses);
        assert!(!report.member());
        assert_eq!(report.witnesses.len(), 4);

        let without_s = FlagInstance::new(
            vec![mu, nu],
            DegenerationType::new(4, vec![1, 2], vec![Subset::empty()]).unwrap(),
        )
        .unwrap();
        let report = theorem_a_report(&without_s).unwrap();
        assert!(report.agree());
        assert!(report.member());
        assert!(report.witnesses.is_empty());
    }

    #[test]
    fn set_map_display_and_validation() {
        let f = SetMapWithZero::projection(&Subset::new(vec![2]), 3);
        assert_eq!(f.image(2), 4);
        assert_eq!(f.image(4), 4); // o ↦ o
        assert_eq!(f.to_string(), "{1↦1, 2↦o, 3↦3, o↦o}");
        assert!(SetMapWithZero::new(2, 3, vec![1]).is_err());
        assert!(SetMapWithZero::new(2, 3, vec![1, 5]).is_err());
    }
}
