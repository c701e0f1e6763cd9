//! Deterministic test-corpus generation and the large cross-module
//! property suites.
//!
//! The corpus mixes three sources: trivial valuations on every matroid
//! with a small ground set (enumerated by brute-force basis-exchange
//! filtering), tropicalized Plücker vectors of random valued matrices
//! (always realizable), and rejection-sampled random integer valuations.
//! All randomness is seed-controlled.
//!
//! The suite runners power both the `corpus-test` CLI subcommand and the
//! acceptance tests.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matroid::{all_matroids, PlueckerVector, ValuatedMatroid};
use crate::quotient::{quotient_check, theorem_a_report, FlagInstance};
use crate::realization::{pluecker_vector, random_ld_realization, verify_classical_ld_relations};
use crate::relations::{
    generate_grassmann_relations, ld_flag_dressian_member, relation_satisfied, DegenerationType,
    PairMode,
};
use crate::sets::{subsets, Subset};
use crate::spaces::{circuits, cocircuits, lift_point, trop_project};
use crate::trop::{form_evaluate_twice, TropicalPoint, TropicalValue};

/// An unvalidated random Plücker vector with values in `{0,…,3, ∞}` and
/// at least one finite entry.
pub fn random_vector(n: usize, r: usize, rng: &mut impl Rng) -> PlueckerVector {
    loop {
        let mut any_finite = false;
        let map: BTreeMap<Subset, TropicalValue> = subsets(n, r)
            .into_iter()
            .map(|b| {
                let v = if rng.gen_bool(0.25) {
                    TropicalValue::Infinity
                } else {
                    any_finite = true;
                    TropicalValue::from_int(rng.gen_range(0..=3))
                };
                (b, v)
            })
            .collect();
        if any_finite {
            return PlueckerVector::new(n, r, map).expect("random vector is well formed");
        }
    }
}

/// Tropicalization of a random full-rank valued matrix; always a
/// valuated matroid.
pub fn realizable_valuated(n: usize, r: usize, rng: &mut impl Rng) -> Result<ValuatedMatroid> {
    let dt = DegenerationType::new(n, vec![r], vec![])?;
    let ms = random_ld_realization(&dt, (-2, 2), rng)?;
    Ok(pluecker_vector(&ms[0])?.1)
}

/// Rejection-sampled valuated matroid; falls back to a realizable one
/// after `tries` failures. `None` only for impossible parameters.
pub fn random_valuated(
    n: usize,
    r: usize,
    rng: &mut impl Rng,
    tries: usize,
) -> Option<ValuatedMatroid> {
    if r > n {
        return None;
    }
    if r == 0 {
        let map = [(Subset::empty(), TropicalValue::zero())].into_iter().collect();
        let pv = PlueckerVector::new(n, 0, map).expect("rank-zero vector");
        return Some(ValuatedMatroid::from_vector(pv).expect("rank-zero matroid"));
    }
    for _ in 0..tries {
        let pv = random_vector(n, r, rng);
        if let Ok(vm) = ValuatedMatroid::from_vector(pv) {
            return Some(vm);
        }
    }
    realizable_valuated(n, r, rng).ok()
}

/// A random valuated matroid whose loops include the given set.
pub fn random_valuated_with_loops(
    n: usize,
    r: usize,
    loops: &Subset,
    rng: &mut impl Rng,
    tries: usize,
) -> Option<ValuatedMatroid> {
    let rest = loops.complement(n);
    if r > rest.len() {
        return None;
    }
    let inner = random_valuated(rest.len(), r, rng, tries)?;
    let labels: Vec<usize> = rest.iter().collect();
    let map = inner
        .vector()
        .entries()
        .filter(|(_, v)| v.is_finite())
        .map(|(b, v)| {
            let relabeled: Subset = b.iter().map(|i| labels[i - 1]).collect();
            (relabeled, v.clone())
        })
        .collect();
    let pv = PlueckerVector::new(n, r, map).expect("loop embedding is well formed");
    Some(ValuatedMatroid::from_vector(pv).expect("loop embedding preserves the exchange axiom"))
}

/// A random valuated matroid that is `∞` on every basis containing `s`.
pub fn random_valuated_avoiding(
    n: usize,
    r: usize,
    s: usize,
    rng: &mut impl Rng,
    tries: usize,
) -> Option<ValuatedMatroid> {
    random_valuated_with_loops(n, r, &Subset::new(vec![s]), rng, tries)
}

/// A rank-one Plücker vector whose point lies in `trop(ν)`: a random
/// finite tropical combination of the cocircuits of `ν`.
pub fn random_rank_one_member(nu: &ValuatedMatroid, rng: &mut impl Rng) -> PlueckerVector {
    let gens = cocircuits(nu);
    assert!(!gens.is_empty(), "rank-zero matroid has no cocircuits");
    let mut acc = vec![TropicalValue::Infinity; nu.n()];
    for g in &gens {
        let lambda = TropicalValue::from_int(rng.gen_range(0..=3));
        for (a, s) in acc.iter_mut().zip(g.point.scaled(&lambda)) {
            *a = a.min_with(&s);
        }
    }
    let map = acc
        .into_iter()
        .enumerate()
        .map(|(i, v)| (Subset::new(vec![i + 1]), v))
        .collect();
    PlueckerVector::new(nu.n(), 1, map).expect("span samples have a finite coordinate")
}

/// Trivial valuations on every matroid with ground set size up to
/// `n_max`, every rank.
pub fn trivial_corpus(n_max: usize) -> Vec<ValuatedMatroid> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for r in 0..=n {
            for m in all_matroids(n, r) {
                out.push(ValuatedMatroid::trivial(&m));
            }
        }
    }
    out
}

/// The standard mixed corpus: all trivial matroids plus seeded random
/// realizable and rejection-sampled valuated matroids.
pub fn standard_corpus(n_max: usize, seed: u64) -> Vec<ValuatedMatroid> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = trivial_corpus(n_max);
    for n in 2..=n_max {
        for r in 1..n {
            for _ in 0..6 {
                if let Ok(vm) = realizable_valuated(n, r, &mut rng) {
                    out.push(vm);
                }
                if let Some(vm) = random_valuated(n, r, &mut rng, 40) {
                    out.push(vm);
                }
            }
        }
    }
    out
}

/// Outcome of one property suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} failures",
            self.name,
            self.cases,
            self.failures.len()
        )
    }
}

fn random_degeneration_set(
    m: &ValuatedMatroid,
    rng: &mut impl Rng,
) -> Subset {
    let underlying = m.underlying_matroid();
    loop {
        let s: Subset = (1..=m.n()).filter(|_| rng.gen_bool(0.35)).collect();
        if underlying.rank_of(&s.complement(m.n())) >= 1 {
            return s;
        }
    }
}

/// Samples a flag instance: matroids of nondecreasing ranks on a common
/// ground set with degeneration sets keeping every deletion rank
/// positive. Mixes members (realizable chains, uniform flags) with
/// generic non-members.
pub fn sample_flag_instance(n_max: usize, rng: &mut impl Rng) -> Result<FlagInstance> {
    let n = rng.gen_range(2..=n_max.max(2));
    let k = rng.gen_range(1..=3usize);
    let mut ranks: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
    ranks.sort_unstable();

    let style = rng.gen_range(0..3u8);
    let matroids: Vec<ValuatedMatroid> = match style {
        // Tropicalized realizable chain with the sets drawn later:
        // members when the sets match, usually non-members otherwise.
        0 => {
            let sets: Vec<Subset> = (1..k)
                .map(|_| (1..=n).filter(|_| rng.gen_bool(0.3)).collect())
                .collect();
            let dt = DegenerationType::new(n, ranks.clone(), sets)?;
            let matrices = random_ld_realization(&dt, (-2, 2), rng)?;
            matrices
                .iter()
                .map(|m| Ok(pluecker_vector(m)?.1))
                .collect::<Result<_>>()?
        }
        1 => ranks.iter().map(|&r| ValuatedMatroid::uniform(r, n)).collect(),
        _ => ranks
            .iter()
            .map(|&r| random_valuated(n, r, rng, 40).expect("rank within bounds"))
            .collect(),
    };

    let sets: Vec<Subset> = matroids[..k - 1]
        .iter()
        .map(|m| random_degeneration_set(m, rng))
        .collect();
    let dt = DegenerationType::new(n, ranks, sets)?;
    FlagInstance::new(matroids, dt)
}

/// The four predicates of the main equivalence must agree on every
/// sampled instance.
pub fn run_theorem_a_suite(n_max: usize, count: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut members = 0usize;
    for case in 0..count {
        let fi = sample_flag_instance(n_max, &mut rng)?;
        let report = theorem_a_report(&fi)?;
        if report.member() {
            members += 1;
        }
        if !report.agree() {
            failures.push(format!(
                "case {case}: predicates disagree (a={}, b={}, c={}, d={}); witnesses: {:?}",
                report.dressian,
                report.ld_flag_matroid,
                report.projection_containment,
                report.morphisms,
                report.witnesses
            ));
            if failures.len() > 10 {
                break;
            }
        }
    }
    Ok(SuiteReport {
        name: format!("theorem-a agreement ({count} instances, {members} members)"),
        cases: count,
        failures,
    })
}

/// Projection proposition: sampled span points of `trop(μ)` project into
/// `trop(μ_S)`, and every cocircuit of `μ_S` lifts back to a verified
/// point of `trop(μ)`.
pub fn run_projection_suite(n_max: usize, samples_per: usize, seed: u64) -> Result<SuiteReport> {
    let corpus = standard_corpus(n_max, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for m in corpus.iter().filter(|m| m.rank() >= 1) {
        let n = m.n();
        let underlying = m.underlying_matroid();
        let gens = cocircuits(m);
        for s in all_subsets(n) {
            if underlying.rank_of(&s.complement(n)) == 0 {
                continue;
            }
            cases += 1;
            let ms = match m.mu_s(&s) {
                Ok(ms) => ms,
                Err(e) => {
                    failures.push(format!("μ_S failed for {m}, S={s}: {e}"));
                    continue;
                }
            };
            let target_circuits = circuits(&ms);

            // (i) span samples project into trop(μ_S).
            for _ in 0..samples_per {
                let mut acc = vec![TropicalValue::Infinity; n];
                for g in &gens {
                    let lambda = TropicalValue::from_int(rng.gen_range(0..=3));
                    for (a, v) in acc.iter_mut().zip(g.point.scaled(&lambda)) {
                        *a = a.min_with(&v);
                    }
                }
                let x = TropicalPoint::new(acc).expect("span point has a finite coordinate");
                let Some(projected) = trop_project(&x, &s) else {
                    failures.push(format!("projection of {x} by {s} collapsed"));
                    continue;
                };
                let inside = target_circuits
                    .iter()
                    .all(|c| form_evaluate_twice(&c.form(), &projected).unwrap_or(false));
                if !inside {
                    failures.push(format!(
                        "span point {x} of {m} projects outside trop(μ_S) for S={s}"
                    ));
                }
            }

            // (ii) cocircuits of μ_S lift back through the elements of S.
            for w in cocircuits(&ms) {
                let mut x = w.point.clone();
                let mut remaining: Vec<usize> = s.iter().collect();
                let mut ok = true;
                while let Some(e) = remaining.pop() {
                    let target = match m.mu_s(&Subset::new(remaining.clone())) {
                        Ok(t) => t,
                        Err(err) => {
                            failures.push(format!("intermediate μ_S failed: {err}"));
                            ok = false;
                            break;
                        }
                    };
                    match lift_point(&x, &target, e) {
                        Ok(lifted) => x = lifted,
                        Err(err) => {
                            failures.push(format!(
                                "lift of cocircuit {} of μ_S (μ={m}, S={s}) failed: {err}",
                                w.point
                            ));
                            ok = false;
                            break;
                        }
                    }
                }
                if ok && trop_project(&x, &s).as_ref() != Some(&w.point) {
                    failures.push(format!(
                        "lifted point {x} does not project back to {} (μ={m}, S={s})",
                        w.point
                    ));
                }
            }
            if failures.len() > 10 {
                return Ok(SuiteReport {
                    name: "projection proposition".into(),
                    cases,
                    failures,
                });
            }
        }
    }
    Ok(SuiteReport {
        name: format!("projection proposition ({cases} matroid/S pairs)"),
        cases,
        failures,
    })
}

/// Constructive realizability: random realization chains satisfy the
/// classical relations, the containments, and tropicalize into the
/// linear degenerate flag Dressian.
pub fn run_realization_suite(n_max: usize, count: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for case in 0..count {
        let n = rng.gen_range(3..=n_max.max(3));
        let k = rng.gen_range(2..=3usize);
        let mut ranks: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        ranks.sort_unstable();
        let sets: Vec<Subset> = (1..k)
            .map(|_| (1..=n).filter(|_| rng.gen_bool(0.3)).collect())
            .collect();
        let dt = DegenerationType::new(n, ranks, sets)?;
        let matrices = random_ld_realization(&dt, (-2, 2), &mut rng)?;

        for i in 0..k - 1 {
            match verify_classical_ld_relations(&matrices[i], &matrices[i + 1], &dt.sets()[i]) {
                Ok(true) => {}
                Ok(false) => failures.push(format!(
                    "case {case}: classical relations fail at step {i}"
                )),
                Err(e) => failures.push(format!("case {case}: {e}")),
            }
        }

        let mut vms = Vec::new();
        for m in &matrices {
            vms.push(pluecker_vector(m)?.1);
        }
        let vectors: Vec<PlueckerVector> = vms.iter().map(|m| m.vector().clone()).collect();
        let membership = ld_flag_dressian_member(&vectors, &dt, PairMode::AllPairs)?;
        if !membership.member {
            failures.push(format!(
                "case {case}: tropicalization escapes the Dressian: {:?}",
                membership.failures.first().map(|f| f.relation.text())
            ));
        }
        // The full four-way report needs every deletion μ_S to be
        // defined; projections can create loops that make a later
        // deletion rank zero, so guard before the extra check.
        let deletions_defined = (0..k - 1).all(|i| {
            vms[i]
                .underlying_matroid()
                .rank_of(&dt.sets()[i].complement(n))
                >= 1
        });
        if deletions_defined {
            let fi = FlagInstance::new(vms, dt)?;
            let report = theorem_a_report(&fi)?;
            if !(report.agree() && report.member()) {
                failures.push(format!("case {case}: equivalence report not all-true"));
            }
        }
        if failures.len() > 10 {
            break;
        }
    }
    Ok(SuiteReport {
        name: format!("constructive realizability ({count} chains)"),
        cases: count,
        failures,
    })
}

/// Exhaustive agreement of tropical Grassmann-Plücker satisfaction and
/// the exchange axiom over all valuations in `{0,1,∞}^C(4,2)` with at
/// least one finite entry.
pub fn run_exchange_oracle_suite() -> Result<SuiteReport> {
    let relations = generate_grassmann_relations(2, 4)?;
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for mask in 0..3usize.pow(6) {
        let mut digits = Vec::with_capacity(6);
        let mut rest = mask;
        for _ in 0..6 {
            digits.push(rest % 3);
            rest /= 3;
        }
        if digits.iter().all(|&d| d == 2) {
            continue; // all-infinite
        }
        cases += 1;
        let dense: Vec<Option<i64>> = digits
            .iter()
            .map(|&d| if d == 2 { None } else { Some(d as i64) })
            .collect();
        let pv = PlueckerVector::from_dense(4, 2, &dense)?;
        let tropical = relations
            .iter()
            .map(|rel| relation_satisfied(rel, &pv, &pv))
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .all(|b| b);
        let exchange = pv.satisfies_exchange_axiom();
        if tropical != exchange {
            failures.push(format!(
                "valuation {dense:?}: relations say {tropical}, exchange says {exchange}"
            ));
        }
    }
    Ok(SuiteReport {
        name: format!("Dressian/exchange equivalence ({cases} valuations)"),
        cases,
        failures,
    })
}

/// Quotients imply quotients of underlying matroids: every flat of the
/// quotient is a flat of the larger matroid. Brute force over flats.
pub fn run_flat_quotient_suite(n_max: usize, count: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut checked = 0usize;
    while checked < count {
        let n = rng.gen_range(2..=n_max);
        let r = rng.gen_range(1..=n);
        let s = rng.gen_range(r..=n);
        let Some(mu) = random_valuated(n, r, &mut rng, 40) else {
            continue;
        };
        let Some(nu) = random_valuated(n, s, &mut rng, 40) else {
            continue;
        };
        if !quotient_check(&mu, &nu)? {
            continue;
        }
        checked += 1;
        let m = mu.underlying_matroid();
        let nflats = nu.underlying_matroid().flats();
        for f in m.flats() {
            if !nflats.contains(&f) {
                failures.push(format!(
                    "flat {f} of {mu} is not a flat of {nu} despite μ ↞ ν"
                ));
            }
        }
    }
    Ok(SuiteReport {
        name: format!("quotient flats ({checked} quotient pairs)"),
        cases: checked,
        failures,
    })
}

fn all_subsets(n: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(subsets(n, k));
    }
    out
}
