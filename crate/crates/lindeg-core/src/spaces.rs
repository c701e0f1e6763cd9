//! Valuated circuits, cocircuits, tropical linear spaces and tropical
//! projections.
//!
//! The tropical linear space `trop(μ)` is the set of points at which
//! every valuated circuit form achieves its minimum at least twice;
//! equivalently it is the tropical span of the cocircuits. Both routes
//! are implemented and cross-checked in the tests.
//!
//! `pr_S^trop` sets the coordinates in `S` to `∞`. Its interplay with
//! `μ_S` — `pr_S(trop(μ)) = trop(μ∖S) × {∞}^S = trop(μ_S)` — comes with
//! a constructive lift, [`lift_point`], which recovers a preimage of a
//! projected point one coordinate at a time.

use std::fmt;

use crate::error::{domain, internal, usage, Result};
use crate::matroid::ValuatedMatroid;
use crate::rat::Rat;
use crate::sets::{subsets, Subset};
use crate::trop::{form_evaluate_twice, TropicalLinearForm, TropicalPoint, TropicalValue};

/// Which family a circuit-like vector belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CircuitKind {
    Circuit,
    Cocircuit,
    Vector,
}

/// A normalized point of `ℙ(𝕋ⁿ)` whose support is a circuit (or
/// cocircuit, or cycle) of the underlying matroid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircuitVector {
    pub point: TropicalPoint,
    pub kind: CircuitKind,
}

impl CircuitVector {
    pub fn form(&self) -> TropicalLinearForm {
        TropicalLinearForm::new(self.point.coords().to_vec())
            .expect("circuit vectors have a finite entry")
    }
}

impl fmt::Display for CircuitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.point)
    }
}

/// The valuated circuits of `μ`: for each `(r+1)`-subset `I`, the vector
/// with entries `μ(I∖i)` on `I` and `∞` outside, discarding the all-`∞`
/// vector and deduplicating after normalization. Order follows the
/// generating subsets `I` lexicographically.
pub fn circuits(m: &ValuatedMatroid) -> Vec<CircuitVector> {
    circuit_family(m, CircuitKind::Circuit)
}

/// The valuated cocircuits: for each `(r−1)`-subset `I`, entries `μ(I∪i)`
/// off `I` and `∞` on `I`. Equal to the circuits of the dual matroid.
pub fn cocircuits(m: &ValuatedMatroid) -> Vec<CircuitVector> {
    circuit_family(m, CircuitKind::Cocircuit)
}

fn circuit_family(m: &ValuatedMatroid, kind: CircuitKind) -> Vec<CircuitVector> {
    let n = m.n();
    let generators: Vec<Subset> = match kind {
        CircuitKind::Circuit => {
            if m.rank() + 1 > n {
                return Vec::new();
            }
            subsets(n, m.rank() + 1)
        }
        CircuitKind::Cocircuit => {
            if m.rank() == 0 {
                return Vec::new();
            }
            subsets(n, m.rank() - 1)
        }
        CircuitKind::Vector => unreachable!("vectors are not generated from subsets"),
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for i_set in generators {
        let coords: Vec<TropicalValue> = (1..=n)
            .map(|i| match kind {
                CircuitKind::Circuit if i_set.contains(i) => m.value(&i_set.without(i)).clone(),
                CircuitKind::Cocircuit if !i_set.contains(i) => m.value(&i_set.with(i)).clone(),
                _ => TropicalValue::Infinity,
            })
            .collect();
        if let Ok(point) = TropicalPoint::new(coords) {
            if seen.insert(point.clone()) {
                out.push(CircuitVector { point, kind });
            }
        }
    }
    out
}

/// Membership in the tropical linear space: every circuit form must
/// achieve its minimum at least twice at `x`.
pub fn in_tropical_linear_space(x: &TropicalPoint, m: &ValuatedMatroid) -> Result<bool> {
    if x.n() != m.n() {
        return Err(usage(format!(
            "point on {} coordinates against a matroid on [{}]",
            x.n(),
            m.n()
        )));
    }
    for c in circuits(m) {
        if !form_evaluate_twice(&c.form(), x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinatewise minimum of `λ_g ⊙ g` over the generators. All lambdas
/// must be finite, matching the cocircuit-span description of `trop(μ)`.
fn finite_span(generators: &[CircuitVector], lambdas: &[TropicalValue]) -> Result<TropicalPoint> {
    if generators.is_empty() {
        return Err(usage("empty generator list"));
    }
    if generators.len() != lambdas.len() {
        return Err(usage(format!(
            "{} lambdas for {} generators",
            lambdas.len(),
            generators.len()
        )));
    }
    if lambdas.iter().any(|l| !l.is_finite()) {
        return Err(usage("span coefficients must be finite"));
    }
    let n = generators[0].point.n();
    let mut acc = vec![TropicalValue::Infinity; n];
    for (g, l) in generators.iter().zip(lambdas) {
        for (a, s) in acc.iter_mut().zip(g.point.scaled(l)) {
            *a = a.min_with(&s);
        }
    }
    TropicalPoint::new(acc)
}

/// Samples a point of `trop(μ)` as a finite tropical combination of the
/// cocircuits. The result is asserted to lie in `trop(μ)`.
pub fn cocircuit_span_sample(
    m: &ValuatedMatroid,
    lambdas: &[TropicalValue],
) -> Result<TropicalPoint> {
    let gens = cocircuits(m);
    let p = finite_span(&gens, lambdas)?;
    if !in_tropical_linear_space(&p, m)? {
        return Err(internal(format!(
            "cocircuit span sample {p} escaped the tropical linear space"
        )));
    }
    Ok(p)
}

/// Samples a vector of `μ` (an element of the tropical span of the
/// circuits, the valuated cycles 𝒱(μ)).
pub fn vectors_sample(m: &ValuatedMatroid, lambdas: &[TropicalValue]) -> Result<TropicalPoint> {
    let gens = circuits(m);
    let p = finite_span(&gens, lambdas)?;
    if !span_membership(&p, &gens)? {
        return Err(internal(format!("vector sample {p} escaped the circuit span")));
    }
    Ok(p)
}

/// Residuation test for min-plus span membership.
///
/// For each generator `g` the principal coefficient is
/// `λ*_g = max_j (x_j − g_j)` over the coordinates where `g` is finite;
/// if `x` is `∞` at such a coordinate no finite coefficient works and the
/// generator is discarded. Then `x` lies in the span iff
/// `⊕_g λ*_g ⊙ g = x`.
pub fn span_membership(x: &TropicalPoint, generators: &[CircuitVector]) -> Result<bool> {
    if generators.is_empty() {
        return Err(usage("empty generator list"));
    }
    let n = x.n();
    let mut acc = vec![TropicalValue::Infinity; n];
    for g in generators {
        if g.point.n() != n {
            return Err(usage("generator dimension mismatch"));
        }
        let mut best: Option<Rat> = None;
        let mut usable = true;
        for i in 1..=n {
            if let TropicalValue::Finite(gi) = g.point.coord(i) {
                match x.coord(i) {
                    TropicalValue::Infinity => {
                        usable = false;
                        break;
                    }
                    TropicalValue::Finite(xi) => {
                        let diff = xi - gi;
                        if best.as_ref().is_none_or(|b| diff > *b) {
                            best = Some(diff);
                        }
                    }
                }
            }
        }
        if !usable {
            continue;
        }
        let lambda = TropicalValue::Finite(best.expect("generators have a finite entry"));
        for (a, s) in acc.iter_mut().zip(g.point.scaled(&lambda)) {
            *a = a.min_with(&s);
        }
    }
    match TropicalPoint::new(acc) {
        Ok(p) => Ok(&p == x),
        Err(_) => Ok(false),
    }
}

/// `pr_S^trop`: sets the coordinates in `S` to `∞` and renormalizes.
/// Returns `None` when everything becomes infinite — `(∞,…,∞)` is not a
/// point of tropical projective space.
pub fn trop_project(x: &TropicalPoint, s: &Subset) -> Option<TropicalPoint> {
    let coords: Vec<TropicalValue> = (1..=x.n())
        .map(|i| {
            if s.contains(i) {
                TropicalValue::Infinity
            } else {
                x.coord(i).clone()
            }
        })
        .collect();
    TropicalPoint::new(coords).ok()
}

/// Witness for a failed projection containment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContainmentWitness {
    pub cocircuit: TropicalPoint,
    pub projected: TropicalPoint,
}

/// Decides `pr_S^trop(trop(μ)) ⊆ trop(ν)` by checking the projected
/// cocircuits of `μ`, which suffices because tropical linear spaces are
/// tropically convex and spanned by their cocircuits.
pub fn projection_containment(
    mu: &ValuatedMatroid,
    nu: &ValuatedMatroid,
    s: &Subset,
) -> Result<bool> {
    Ok(projection_containment_witness(mu, nu, s)?.is_none())
}

/// Like [`projection_containment`] but reports the first projected
/// cocircuit that escapes `trop(ν)`.
pub fn projection_containment_witness(
    mu: &ValuatedMatroid,
    nu: &ValuatedMatroid,
    s: &Subset,
) -> Result<Option<ContainmentWitness>> {
    if mu.n() != nu.n() {
        return Err(usage("matroids on different ground sets"));
    }
    for c in cocircuits(mu) {
        let Some(projected) = trop_project(&c.point, s) else {
            continue;
        };
        if !in_tropical_linear_space(&projected, nu)? {
            return Ok(Some(ContainmentWitness {
                cocircuit: c.point,
                projected,
            }));
        }
    }
    Ok(None)
}

/// Lifts `v ∈ trop(μ∖s) × {∞}^{s}` to a point of `trop(μ)` projecting
/// back to `v`.
///
/// Following the proof of the projection proposition: if every circuit
/// achieves its restricted minimum (over `i ≠ s`) at least twice, the
/// lift keeps coordinate `s` at `∞`; otherwise a circuit `C` witnessing a
/// unique minimum forces `t = min_{i≠s}(C_i + v_i) − C_s`. Any witness
/// works; the first one (in generating-subset order) is used and all
/// witnesses are cross-checked.
pub fn lift_point(v: &TropicalPoint, m: &ValuatedMatroid, s: usize) -> Result<TropicalPoint> {
    if v.n() != m.n() {
        return Err(usage("point dimension does not match the matroid"));
    }
    if s == 0 || s > m.n() {
        return Err(usage(format!("element {s} outside ground set [{}]", m.n())));
    }
    if v.coord(s).is_finite() {
        return Err(domain(format!("coordinate {s} of {v} is not infinite")));
    }

    let all_circuits = circuits(m);
    let mut witnesses: Vec<(&CircuitVector, Rat)> = Vec::new();
    for c in &all_circuits {
        // Minimum of C_i + v_i over i ≠ s, and whether it is unique.
        let mut min: Option<Rat> = None;
        let mut count = 0usize;
        for i in (1..=m.n()).filter(|&i| i != s) {
            if let TropicalValue::Finite(t) = c.point.coord(i).plus(v.coord(i)) {
                match &min {
                    Some(best) if t > *best => {}
                    Some(best) if t == *best => count += 1,
                    _ => {
                        min = Some(t);
                        count = 1;
                    }
                }
            }
        }
        let unique = count == 1 && min.is_some();
        match c.point.coord(s) {
            TropicalValue::Infinity => {
                // Circuit of μ∖s: the precondition demands a doubled minimum.
                if unique {
                    return Err(domain(format!(
                        "{v} does not lie in trop(μ∖{s}): circuit {} has a unique minimum",
                        c.point
                    )));
                }
            }
            TropicalValue::Finite(cs) => {
                if unique {
                    witnesses.push((c, min.unwrap() - cs));
                }
            }
        }
    }

    let lifted = |t: &TropicalValue| -> Result<TropicalPoint> {
        let coords: Vec<TropicalValue> = (1..=m.n())
            .map(|i| if i == s { t.clone() } else { v.coord(i).clone() })
            .collect();
        TropicalPoint::new(coords)
    };

    let t = match witnesses.first() {
        None => TropicalValue::Infinity,
        Some((_, t)) => TropicalValue::Finite(t.clone()),
    };
    // The proof shows any witness works; a disagreement is a bug signal.
    for (c, tw) in &witnesses {
        let candidate = lifted(&TropicalValue::Finite(tw.clone()))?;
        if !in_tropical_linear_space(&candidate, m)? {
            return Err(internal(format!(
                "witness circuit {} produced a lift outside trop(μ)",
                c.point
            )));
        }
    }
    let result = lifted(&t)?;
    if !in_tropical_linear_space(&result, m)? {
        return Err(internal(format!("lift {result} is not in trop(μ)")));
    }
    let back = trop_project(&result, &Subset::new(vec![s]))
        .ok_or_else(|| internal("projection of a lift collapsed to (∞,…,∞)"))?;
    if &back != v {
        return Err(internal(format!("lift {result} does not project back to {v}")));
    }
    Ok(result)
}
