//! Grassmann, incidence and linear degenerate Plücker relations.
//!
//! For `0 ≤ r ≤ s ≤ n` and `S ⊆ [n]`, one relation per pair
//! `I ∈ C(n, r−1)`, `J ∈ C(n, s+1)`:
//!
//! ```text
//! Σ_{j ∈ J∖(I∪S)}  sgn(j; I, J) · p_{I∪j} · p_{J∖j}
//! ```
//!
//! with `sgn(j;I,J) = (−1)^{#{j'∈J : j<j'} + #{i∈I : i>j}}`. Setting
//! `S = ∅` gives the incidence relations, and additionally `r = s` the
//! Grassmann-Plücker relations.
//!
//! The tropical side keeps duplicate monomials (multiset semantics); the
//! classical side merges cancelling monomials, dropping relations that
//! vanish identically.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::error::{usage, Result};
use crate::matroid::PlueckerVector;
use crate::sets::{subsets, Subset};
use crate::trop::{min_achieved_twice, TropicalValue};

/// A tropical quadratic form `⊕_t  q_{A_t} ⊙ p_{B_t}`, where `A_t` is an
/// r-subset and `B_t` an s-subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TropicalRelation {
    /// `(A, B)` per term, ordered by the generating index `j` ascending.
    pub terms: Vec<(Subset, Subset)>,
    pub provenance: RelationProvenance,
}

/// Where a relation came from: ranks, degeneration set and the generating
/// subset pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationProvenance {
    pub r: usize,
    pub s: usize,
    pub set: Subset,
    pub i_set: Subset,
    pub j_set: Subset,
    /// Whether the two variable blocks are the same projective factor.
    /// True only for the Grassmann relations of a single vector; a flag
    /// pair of equal ranks still has distinct factors.
    pub identified: bool,
}

impl TropicalRelation {
    /// A relation is vacuous when it has no terms, or when every monomial
    /// occurs with multiplicity at least two (then some tie is automatic).
    /// Monomials count as unordered pairs only for identified blocks.
    pub fn is_vacuous(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let mut counts: BTreeMap<(&Subset, &Subset), usize> = BTreeMap::new();
        for (a, b) in &self.terms {
            let key = if self.provenance.identified && b < a {
                (b, a)
            } else {
                (a, b)
            };
            *counts.entry(key).or_insert(0) += 1;
        }
        counts.values().all(|&c| c >= 2)
    }

    /// CLI-facing textual form, e.g. `p_{4}*p_{1,2} (+) p_{2}*p_{1,4}`.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(a, b)| format!("p_{{{}}}*p_{{{}}}", a.label(), b.label()))
            .join(" (+) ")
    }
}

impl fmt::Display for TropicalRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// A classical relation after sign merging: `(coefficient, A, B)` terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedRelation {
    pub terms: Vec<(i64, Subset, Subset)>,
    pub provenance: RelationProvenance,
}

impl SignedRelation {
    pub fn text(&self) -> String {
        let mut out = String::new();
        for (k, (c, a, b)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if k > 0 || *c < 0 {
                out.push_str(sign);
                out.push(' ');
            }
            out.push_str(&format!("p_{{{}}}*p_{{{}}} ", a.label(), b.label()));
        }
        out.trim_end().to_string()
    }
}

fn sign(j: usize, i_set: &Subset, j_set: &Subset) -> i64 {
    let above_in_j = j_set.iter().filter(|&x| x > j).count();
    let above_in_i = i_set.iter().filter(|&x| x > j).count();
    if (above_in_j + above_in_i) % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_ranks(r: usize, s: usize, n: usize) -> Result<()> {
    if r > s || s > n {
        return Err(usage(format!(
            "ranks must satisfy 0 ≤ r ≤ s ≤ n, got r={r}, s={s}, n={n}"
        )));
    }
    Ok(())
}

fn generate_relations_inner(
    r: usize,
    s: usize,
    set: &Subset,
    n: usize,
    identified: bool,
) -> Result<Vec<TropicalRelation>> {
    check_ranks(r, s, n)?;
    let mut out = Vec::new();
    if r == 0 {
        return Ok(out); // no (r−1)-subsets
    }
    for i_set in subsets(n, r - 1) {
        for j_set in subsets(n, s + 1) {
            let terms: Vec<(Subset, Subset)> = j_set
                .iter()
                .filter(|&j| !i_set.contains(j) && !set.contains(j))
                .map(|j| (i_set.with(j), j_set.without(j)))
                .collect();
            out.push(TropicalRelation {
                terms,
                provenance: RelationProvenance {
                    r,
                    s,
                    set: set.clone(),
                    i_set: i_set.clone(),
                    j_set: j_set.clone(),
                    identified,
                },
            });
        }
    }
    Ok(out)
}

/// All linear degenerate Plücker relations `𝒫^trop_{r,s;S;n}`, one per
/// `(I, J)` pair in lexicographic order, including vacuous ones. The two
/// variable blocks are distinct factors, also when `r = s`.
pub fn generate_ld_relations(r: usize, s: usize, set: &Subset, n: usize) -> Result<Vec<TropicalRelation>> {
    generate_relations_inner(r, s, set, n, false)
}

/// The Grassmann-Plücker relations `𝒫^trop_{r;n}` of a single factor:
/// `r = s` with both blocks identified, so mirrored monomial pairs are
/// duplicates and the corresponding relations are vacuous.
pub fn generate_grassmann_relations(r: usize, n: usize) -> Result<Vec<TropicalRelation>> {
    generate_relations_inner(r, r, &Subset::empty(), n, true)
}

fn sign_merged(rel: &TropicalRelation) -> Vec<(i64, Subset, Subset)> {
    let mut merged: BTreeMap<(Subset, Subset), i64> = BTreeMap::new();
    for (a, b) in &rel.terms {
        let j = a.minus(&rel.provenance.i_set).elements()[0];
        let c = sign(j, &rel.provenance.i_set, &rel.provenance.j_set);
        let key = if rel.provenance.identified && b < a {
            (b.clone(), a.clone())
        } else {
            (a.clone(), b.clone())
        };
        *merged.entry(key).or_insert(0) += c;
    }
    merged
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((a, b), c)| (c, a, b))
        .collect()
}

fn signed_from_tropical(tropical: Vec<TropicalRelation>) -> Vec<SignedRelation> {
    tropical
        .into_iter()
        .filter_map(|rel| {
            let terms = sign_merged(&rel);
            (!terms.is_empty()).then_some(SignedRelation {
                terms,
                provenance: rel.provenance,
            })
        })
        .collect()
}

/// Classical companions of [`generate_ld_relations`]: identically-zero
/// relations are dropped. With distinct blocks no monomials collide.
pub fn generate_signed_relations(
    r: usize,
    s: usize,
    set: &Subset,
    n: usize,
) -> Result<Vec<SignedRelation>> {
    Ok(signed_from_tropical(generate_ld_relations(r, s, set, n)?))
}

/// Classical Grassmann-Plücker relations with identified blocks:
/// mirrored monomials cancel, dropping e.g. every relation of `𝒫_{3;4}`.
pub fn generate_signed_grassmann(r: usize, n: usize) -> Result<Vec<SignedRelation>> {
    Ok(signed_from_tropical(generate_grassmann_relations(r, n)?))
}

/// Human-facing listing form: drops vacuous relations and duplicates
/// (distinct `(I,J)` pairs can generate the same polynomial; every
/// Grassmann relation arises several times).
pub fn dedupe_relations(rels: &[TropicalRelation]) -> Vec<TropicalRelation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for rel in rels {
        if rel.is_vacuous() {
            continue;
        }
        let mut key: Vec<(Subset, Subset)> = rel
            .terms
            .iter()
            .map(|(a, b)| {
                if rel.provenance.identified && b < a {
                    (b.clone(), a.clone())
                } else {
                    (a.clone(), b.clone())
                }
            })
            .collect();
        key.sort();
        if seen.insert(key) {
            out.push(rel.clone());
        }
    }
    out
}

/// Deduplicates signed relations up to global sign, normalizing the
/// leading coefficient to be positive.
pub fn dedupe_signed_relations(rels: &[SignedRelation]) -> Vec<SignedRelation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for rel in rels {
        let mut terms = rel.terms.clone();
        if terms.first().is_some_and(|(c, _, _)| *c < 0) {
            for t in &mut terms {
                t.0 = -t.0;
            }
        }
        if seen.insert(terms.clone()) {
            out.push(SignedRelation {
                terms,
                provenance: rel.provenance.clone(),
            });
        }
    }
    out
}

/// Evaluates a tropical relation on a pair of Plücker vectors: each term
/// becomes `q(A) ⊙ p(B)` and the minimum must be achieved at least twice.
/// Zero-term relations hold vacuously.
pub fn relation_satisfied(
    rel: &TropicalRelation,
    q: &PlueckerVector,
    p: &PlueckerVector,
) -> Result<bool> {
    if rel.terms.is_empty() {
        return Ok(true);
    }
    if q.r() != rel.provenance.r || p.r() != rel.provenance.s || q.n() != p.n() {
        return Err(usage(format!(
            "relation indices (r={}, s={}) incompatible with vectors of rank {} and {} on n={} / n={}",
            rel.provenance.r,
            rel.provenance.s,
            q.r(),
            p.r(),
            q.n(),
            p.n()
        )));
    }
    let terms: Vec<TropicalValue> = rel
        .terms
        .iter()
        .map(|(a, b)| q.value(a).plus(p.value(b)))
        .collect();
    min_achieved_twice(&terms)
}

/// How pairs of flag steps are coupled when testing membership.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairMode {
    /// Only consecutive steps `(i, i+1)` with `S_i`.
    Consecutive,
    /// All pairs `(i, j)` with `S_{ij} = S_i ∪ … ∪ S_{j−1}`.
    AllPairs,
}

/// A rank vector together with its degeneration sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenerationType {
    n: usize,
    ranks: Vec<usize>,
    sets: Vec<Subset>,
}

impl DegenerationType {
    pub fn new(n: usize, ranks: Vec<usize>, sets: Vec<Subset>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(usage("empty rank vector"));
        }
        if sets.len() + 1 != ranks.len() {
            return Err(usage(format!(
                "need exactly {} degeneration sets for {} ranks, got {}",
                ranks.len() - 1,
                ranks.len(),
                sets.len()
            )));
        }
        if ranks.windows(2).any(|w| w[0] > w[1]) || *ranks.last().unwrap() > n {
            return Err(usage(format!(
                "ranks must be nondecreasing and at most n={n}: {ranks:?}"
            )));
        }
        for s in &sets {
            if let Some(&e) = s.elements().iter().find(|&&e| e == 0 || e > n) {
                return Err(usage(format!("element {e} outside ground set [{n}]")));
            }
        }
        Ok(DegenerationType { n, ranks, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn steps(&self) -> usize {
        self.ranks.len()
    }

    /// `S_{ij} = S_i ∪ S_{i+1} ∪ … ∪ S_{j−1}` for 1-based `i < j`.
    pub fn set_between(&self, i: usize, j: usize) -> Subset {
        let mut acc = Subset::empty();
        for k in i..j {
            acc = acc.union(&self.sets[k - 1]);
        }
        acc
    }
}

/// One failed relation in a membership test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationFailure {
    /// Human-readable block, e.g. `grassmann(2)` or `incidence(1,2;S={1})`.
    pub block: String,
    pub relation: TropicalRelation,
}

/// Outcome of a (linear degenerate) flag Dressian membership test.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembershipReport {
    pub member: bool,
    pub failures: Vec<RelationFailure>,
}

/// Tests membership of a tuple of Plücker vectors in the linear
/// degenerate flag Dressian of the given type: every factor must satisfy
/// its Grassmann-Plücker relations and every coupled pair its linear
/// degenerate incidence relations.
pub fn ld_flag_dressian_member(
    candidates: &[PlueckerVector],
    dt: &DegenerationType,
    mode: PairMode,
) -> Result<MembershipReport> {
    if candidates.len() != dt.steps() {
        return Err(usage(format!(
            "expected {} candidates, got {}",
            dt.steps(),
            candidates.len()
        )));
    }
    for (c, &r) in candidates.iter().zip(dt.ranks()) {
        if c.r() != r || c.n() != dt.n() {
            return Err(usage(format!(
                "candidate of rank {} on [{}] does not match declared rank {} on [{}]",
                c.r(),
                c.n(),
                r,
                dt.n()
            )));
        }
    }
    let mut failures = Vec::new();
    for (idx, c) in candidates.iter().enumerate() {
        let r = c.r();
        for rel in generate_grassmann_relations(r, dt.n())? {
            if !relation_satisfied(&rel, c, c)? {
                failures.push(RelationFailure {
                    block: format!("grassmann(factor {}, rank {r})", idx + 1),
                    relation: rel,
                });
            }
        }
    }
    let pairs: Vec<(usize, usize)> = match mode {
        PairMode::Consecutive => (1..dt.steps()).map(|i| (i, i + 1)).collect(),
        PairMode::AllPairs => (1..=dt.steps()).tuple_combinations().collect(),
    };
    for (i, j) in pairs {
        let set = dt.set_between(i, j);
        let (q, p) = (&candidates[i - 1], &candidates[j - 1]);
        for rel in generate_ld_relations(q.r(), p.r(), &set, dt.n())? {
            if !relation_satisfied(&rel, q, p)? {
                failures.push(RelationFailure {
                    block: format!("incidence({i},{j};S={set})"),
                    relation: rel,
                });
            }
        }
    }
    Ok(MembershipReport {
        member: failures.is_empty(),
        failures,
    })
}
