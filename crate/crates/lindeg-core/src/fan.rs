//! Tropical prevariety enumeration at desk scale.
//!
//! A tuple of Plücker relations cuts out a fan in `ℝ^N` (the finite
//! stratum): a point belongs to it iff every relation's minimum is
//! achieved at least twice. The fan is stratified by *tie patterns* — a
//! choice, per relation, of which terms jointly attain the minimum. The
//! closed cone of a pattern is given by equalities (within each tie set)
//! and weak inequalities (tie value ≤ the other terms).
//!
//! The enumerator walks tie-pattern assignments depth first and keeps a
//! pattern only while it is *exactly achievable*: some point attains
//! precisely the chosen ties, strictly below all other terms. Exact
//! achievability is monotone under extension, so pruning is safe, and
//! the surviving full patterns are in bijection with the distinct closed
//! cones of the stratification. On those, the facial order is reverse
//! componentwise inclusion of patterns, which makes maximal cones, the
//! f-vector and ray representatives purely combinatorial byproducts —
//! only the strict-feasibility checks need exact linear programming.
//!
//! The lineality space of the fan equals the all-ties subspace, which is
//! also exactly the kernel computed by [`homogeneity_space`]; both are
//! reported, and the containment required by the homogeneity lemma is
//! asserted on every run.

use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::error::{internal, usage, Error, Result};
use crate::lp::{kernel_basis, primitive, rank, reduce_mod_rows, rref, strictly_feasible};
use crate::matroid::PlueckerVector;
use crate::rat::{rat, Rat};
use crate::relations::{
    generate_grassmann_relations, generate_ld_relations, ld_flag_dressian_member,
    relation_satisfied, DegenerationType, PairMode, TropicalRelation,
};
use crate::sets::{binomial, subsets, Subset};
use crate::trop::TropicalValue;

/// A relation compiled to linear forms over the combined coordinate
/// space of all factors.
#[derive(Clone, Debug)]
pub struct CompiledRelation {
    pub label: String,
    /// One dense linear form per term: the form of `q_A ⊙ p_B` is
    /// `e_A + e_B`.
    pub terms: Vec<Vec<Rat>>,
    /// The same terms as variable index pairs.
    pub monomials: Vec<(usize, usize)>,
}

/// The compiled defining system of a linear degenerate flag Dressian.
#[derive(Clone, Debug)]
pub struct FanSystem {
    pub dt: DegenerationType,
    pub nvars: usize,
    /// Variable offset of each factor block.
    pub offsets: Vec<usize>,
    /// Nonvacuous relations only; vacuous ones impose nothing.
    pub relations: Vec<CompiledRelation>,
}

impl FanSystem {
    /// Upper bound on the tie-pattern search space (diagnostic).
    pub fn pattern_bound(&self) -> f64 {
        self.relations
            .iter()
            .map(|r| {
                let t = r.terms.len() as u32;
                if t < 2 {
                    1.0
                } else {
                    (2f64.powi(t as i32) - t as f64 - 1.0) + 1.0
                }
            })
            .product()
    }

    /// Index of the variable for subset `b` in factor `factor` (0-based).
    pub fn var_index(&self, factor: usize, b: &Subset) -> usize {
        let r = self.dt.ranks()[factor];
        let pos = subsets(self.dt.n(), r)
            .iter()
            .position(|x| x == b)
            .expect("subset indexes a coordinate");
        self.offsets[factor] + pos
    }
}

/// Compiles the Grassmann blocks of every factor and the (all-pairs)
/// linear degenerate incidence blocks into linear forms.
pub fn compile_system(dt: &DegenerationType) -> Result<FanSystem> {
    let n = dt.n();
    let mut offsets = Vec::with_capacity(dt.steps());
    let mut nvars = 0usize;
    for &r in dt.ranks() {
        offsets.push(nvars);
        nvars += binomial(n, r);
    }
    let mut relations = Vec::new();
    // Distinct (I,J) pairs can generate the same polynomial — the
    // three-term Grassmann relation on four elements arises four times;
    // keep one copy.
    let mut seen_keys = std::collections::BTreeSet::new();
    let mut push = |rel: &TropicalRelation, fq: usize, fp: usize, label: String| -> Result<()> {
        if rel.is_vacuous() {
            return Ok(());
        }
        let index = |factor: usize, b: &Subset| -> usize {
            let r = dt.ranks()[factor];
            offsets[factor]
                + subsets(n, r)
                    .iter()
                    .position(|x| x == b)
                    .expect("term subset is a coordinate")
        };
        let mut monomials = Vec::new();
        let mut terms = Vec::new();
        for (a, b) in &rel.terms {
            let (ia, ib) = (index(fq, a), index(fp, b));
            let mut form = vec![rat(0); nvars];
            form[ia] += rat(1);
            form[ib] += rat(1);
            monomials.push((ia, ib));
            terms.push(form);
        }
        // Distinct monomials give distinct forms; a partially duplicated
        // relation would break the pattern/cone bijection.
        let mut key: Vec<(usize, usize)> = monomials
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        key.sort_unstable();
        let mut deduped = key.clone();
        deduped.dedup();
        if deduped.len() != key.len() {
            return Err(internal(format!(
                "nonvacuous relation with duplicated monomials: {}",
                rel.text()
            )));
        }
        if !seen_keys.insert(key) {
            return Ok(());
        }
        relations.push(CompiledRelation {
            label,
            terms,
            monomials,
        });
        Ok(())
    };

    for (i, &r) in dt.ranks().iter().enumerate() {
        for rel in generate_grassmann_relations(r, n)? {
            push(&rel, i, i, format!("grassmann(factor {})", i + 1))?;
        }
    }
    for i in 1..=dt.steps() {
        for j in i + 1..=dt.steps() {
            let set = dt.set_between(i, j);
            let (ri, rj) = (dt.ranks()[i - 1], dt.ranks()[j - 1]);
            for rel in generate_ld_relations(ri, rj, &set, n)? {
                push(&rel, i - 1, j - 1, format!("incidence({i},{j};S={set})"))?;
            }
        }
    }
    Ok(FanSystem {
        dt: dt.clone(),
        nvars,
        offsets,
        relations,
    })
}

/// One enumerated cone: a closed tie pattern with its equality span and
/// a relative-interior witness.
#[derive(Clone, Debug)]
pub struct Cone {
    /// Tie set per relation (term indices, sorted).
    pub pattern: Vec<Vec<usize>>,
    /// RREF rows spanning the equality constraints.
    pub eq_rref: Vec<Vec<Rat>>,
    pub dim: usize,
    /// A point attaining exactly the chosen ties.
    pub interior: Vec<Rat>,
}

impl Cone {
    /// Facial order: `self` is a face of `other` iff every tie set of
    /// `other` is contained in the corresponding tie set of `self`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.pattern
            .iter()
            .zip(&other.pattern)
            .all(|(mine, theirs)| theirs.iter().all(|t| mine.contains(t)))
    }
}

#[derive(Clone, Debug)]
pub struct EnumerationOptions {
    /// Maximum number of search nodes before aborting.
    pub budget: u64,
    /// Optional wall-clock limit.
    pub time_limit: Option<std::time::Duration>,
    /// Emit progress lines to stderr.
    pub progress: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: 50_000_000,
            time_limit: None,
            progress: false,
        }
    }
}

/// Summary data of an enumerated fan. Dimensions are projective: the
/// per-factor all-ones vectors are quotiented out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanSummary {
    pub ambient_dim: usize,
    pub factors: usize,
    /// Empty prevariety (e.g. an unsatisfiable one-term relation).
    pub is_empty: bool,
    pub lineality_dim: Option<usize>,
    pub homogeneity_dim: usize,
    /// Lemma containment, asserted; recorded for the report.
    pub homogeneity_within_lineality: bool,
    pub homogeneity_equals_lineality: bool,
    /// Face counts by dimension above the lineality space; `f[0] = 1` is
    /// the lineality space itself.
    pub f_vector: Vec<usize>,
    pub maximal_cones: usize,
    /// Every maximal cone has exactly `dim − lineality` extreme rays.
    pub simplicial: bool,
    /// Primitive ray representatives, reduced modulo lineality, sorted.
    pub rays: Vec<Vec<Rat>>,
    pub nodes_visited: u64,
}

/// Full enumeration result: summary plus every face as a [`Cone`].
#[derive(Clone, Debug)]
pub struct FanResult {
    pub summary: FanSummary,
    pub cones: Vec<Cone>,
    /// Indices (into `cones`) of the maximal cones.
    pub maximal: Vec<usize>,
}

struct Dfs<'a> {
    sys: &'a FanSystem,
    opts: &'a EnumerationOptions,
    started: std::time::Instant,
    visited: u64,
    leaves: Vec<Cone>,
    /// Raw strict forms accumulated along the current path.
    strict_forms: Vec<Vec<Rat>>,
    /// Raw tie-equality rows accumulated along the current path.
    eq_rows: Vec<Vec<Rat>>,
    pattern: Vec<Vec<usize>>,
}

/// Equality span, strict witness and dimension data of a feasible node.
struct NodeState {
    eq_rref: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    witness: Vec<Rat>,
}

impl Dfs<'_> {
    fn run(&mut self) -> Result<()> {
        if self.sys.relations.is_empty() {
            // No constraints: the whole space is one cone.
            self.leaves.push(Cone {
                pattern: Vec::new(),
                eq_rref: Vec::new(),
                dim: self.sys.nvars,
                interior: vec![rat(0); self.sys.nvars],
            });
            return Ok(());
        }
        self.descend(0)
    }

    /// Strict feasibility of the accumulated system. Equalities are
    /// substituted out first; the strict forms are reduced, normalized
    /// and deduplicated before a single small LP decides the rest.
    fn node_state(&self) -> Option<NodeState> {
        let mut eq = self.eq_rows.clone();
        let pivots = rref(&mut eq);
        let mut seen = std::collections::BTreeSet::new();
        let mut forms: Vec<Vec<Rat>> = Vec::new();
        for f in &self.strict_forms {
            let g = reduce_mod_rows(f, &eq, &pivots);
            if g.iter().all(|c| *c == rat(0)) {
                // The ties force equality with a term that must stay
                // strictly above: infeasible.
                return None;
            }
            let g = primitive(&g);
            if seen.insert(g.clone()) {
                forms.push(g);
            }
        }
        if forms.is_empty() {
            // Only ties so far: the zero vector is interior.
            return Some(NodeState {
                eq_rref: eq,
                pivots,
                witness: vec![rat(0); self.sys.nvars],
            });
        }
        let mut witness = strictly_feasible(&[], &forms)?;
        witness.resize(self.sys.nvars, rat(0));
        // Re-impose the equalities: pivot coordinates are determined by
        // the free ones, and the reduced forms only see free coordinates.
        for (row, &p) in eq.iter().zip(&pivots) {
            let mut v = rat(0);
            for (j, c) in row.iter().enumerate() {
                if j != p && *c != rat(0) {
                    v -= c * &witness[j];
                }
            }
            witness[p] = v;
        }
        Some(NodeState {
            eq_rref: eq,
            pivots,
            witness,
        })
    }

    fn descend(&mut self, level: usize) -> Result<()> {
        let nterms = self.sys.relations[level].terms.len();
        if nterms < 2 {
            // A single-term relation is never satisfied at finite points.
            return Ok(());
        }
        for mask in 0u32..(1u32 << nterms) {
            if mask.count_ones() < 2 {
                continue;
            }
            self.visited += 1;
            if self.visited > self.opts.budget {
                return Err(Error::Budget(format!(
                    "node budget {} exhausted at level {level} with {} cones found",
                    self.opts.budget,
                    self.leaves.len()
                )));
            }
            if let Some(limit) = self.opts.time_limit {
                if self.visited.is_multiple_of(256) && self.started.elapsed() > limit {
                    return Err(Error::Budget(format!(
                        "time limit {limit:?} exhausted after {} nodes with {} cones found",
                        self.visited,
                        self.leaves.len()
                    )));
                }
            }
            if self.opts.progress && self.visited.is_multiple_of(5000) {
                eprintln!(
                    "  …{} nodes, {} cones, level {level}",
                    self.visited,
                    self.leaves.len()
                );
            }
            let ties: Vec<usize> = (0..nterms).filter(|t| mask >> t & 1 == 1).collect();
            let rel = &self.sys.relations[level];
            let eq_mark = self.eq_rows.len();
            let strict_mark = self.strict_forms.len();
            let rep = &rel.terms[ties[0]];
            for &t in &ties[1..] {
                let diff: Vec<Rat> = rep.iter().zip(&rel.terms[t]).map(|(a, b)| a - b).collect();
                self.eq_rows.push(diff);
            }
            for t in (0..nterms).filter(|t| !ties.contains(t)) {
                let diff: Vec<Rat> = rep.iter().zip(&rel.terms[t]).map(|(a, b)| a - b).collect();
                self.strict_forms.push(diff);
            }
            self.pattern.push(ties);

            if let Some(state) = self.node_state() {
                if level + 1 == self.sys.relations.len() {
                    self.leaves.push(Cone {
                        pattern: self.pattern.clone(),
                        eq_rref: state.eq_rref,
                        dim: self.sys.nvars - state.pivots.len(),
                        interior: state.witness,
                    });
                } else {
                    self.descend(level + 1)?;
                }
            }

            self.pattern.pop();
            self.eq_rows.truncate(eq_mark);
            self.strict_forms.truncate(strict_mark);
        }
        Ok(())
    }
}

/// Enumerates the prevariety fan of a compiled system.
pub fn enumerate_prevariety(sys: &FanSystem, opts: &EnumerationOptions) -> Result<FanResult> {
    let mut dfs = Dfs {
        sys,
        opts,
        started: std::time::Instant::now(),
        visited: 0,
        leaves: Vec::new(),
        strict_forms: Vec::new(),
        eq_rows: Vec::new(),
        pattern: Vec::new(),
    };
    dfs.run()?;
    let visited = dfs.visited;
    let cones = dfs.leaves;

    let homogeneity = homogeneity_space(sys);

    if cones.is_empty() {
        return Ok(FanResult {
            summary: FanSummary {
                ambient_dim: sys.nvars,
                factors: sys.dt.steps(),
                is_empty: true,
                lineality_dim: None,
                homogeneity_dim: homogeneity.projective_dim,
                homogeneity_within_lineality: true,
                homogeneity_equals_lineality: false,
                f_vector: Vec::new(),
                maximal_cones: 0,
                simplicial: true,
                rays: Vec::new(),
                nodes_visited: visited,
            },
            cones,
            maximal: Vec::new(),
        });
    }

    // The lineality space is the all-ties subspace: the common minimal
    // face of every pattern cone.
    let mut all_ties: Vec<Vec<Rat>> = Vec::new();
    for rel in &sys.relations {
        for t in 1..rel.terms.len() {
            let diff: Vec<Rat> = rel.terms[0]
                .iter()
                .zip(&rel.terms[t])
                .map(|(a, b)| a - b)
                .collect();
            all_ties.push(diff);
        }
    }
    let lineality_raw = sys.nvars - rank(&all_ties);
    let lineality_basis = kernel_basis(&all_ties, sys.nvars);
    let lineality_dim = lineality_raw - sys.dt.steps();

    // Homogeneity lemma: the homogeneity space is contained in the
    // lineality space. Here both arise as kernels of the same term
    // differences, so containment is structural; verify anyway.
    let contained = homogeneity
        .basis
        .iter()
        .all(|v| all_ties.iter().all(|row| dot(row, v) == rat(0)));
    if !contained || homogeneity.projective_dim > lineality_dim {
        return Err(internal(
            "homogeneity space escaped the lineality space, violating the grading lemma",
        ));
    }

    // f-vector by dimension above lineality.
    let max_dim = cones.iter().map(|c| c.dim).max().unwrap_or(lineality_raw);
    let mut f_vector = vec![0usize; max_dim - lineality_raw + 1];
    for c in &cones {
        f_vector[c.dim - lineality_raw] += 1;
    }
    if f_vector[0] != 1 {
        return Err(internal(format!(
            "expected a unique minimal face, found {}",
            f_vector[0]
        )));
    }

    // Maximal cones: minimal patterns under componentwise inclusion.
    let maximal: Vec<usize> = (0..cones.len())
        .filter(|&i| {
            !(0..cones.len())
                .any(|j| j != i && cones[i].is_face_of(&cones[j]) )
        })
        .collect();

    // Rays: faces one dimension above the lineality space, reduced
    // modulo it and scaled primitive.
    let mut lin_rref = lineality_basis.clone();
    let lin_pivots = rref(&mut lin_rref);
    let mut rays: Vec<Vec<Rat>> = cones
        .iter()
        .filter(|c| c.dim == lineality_raw + 1)
        .map(|c| primitive(&reduce_mod_rows(&c.interior, &lin_rref, &lin_pivots)))
        .collect();
    rays.sort();
    rays.dedup();
    if rays.len() != f_vector.get(1).copied().unwrap_or(0) {
        return Err(internal("distinct rays disagree with the f-vector"));
    }

    // Simpliciality of the maximal cones, reported but not contractual.
    let simplicial = maximal.iter().all(|&i| {
        let nrays = cones
            .iter()
            .filter(|c| c.dim == lineality_raw + 1 && c.is_face_of(&cones[i]))
            .count();
        nrays == cones[i].dim - lineality_raw
    });

    Ok(FanResult {
        summary: FanSummary {
            ambient_dim: sys.nvars,
            factors: sys.dt.steps(),
            is_empty: false,
            lineality_dim: Some(lineality_dim),
            homogeneity_dim: homogeneity.projective_dim,
            homogeneity_within_lineality: contained,
            homogeneity_equals_lineality: homogeneity.projective_dim == lineality_dim,
            f_vector,
            maximal_cones: maximal.len(),
            simplicial,
            rays,
            nodes_visited: visited,
        },
        cones,
        maximal,
    })
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(rat(0), |acc, (x, y)| acc + x * y)
}

/// The space of gradings making every relation homogeneous: the kernel
/// of the monomial exponent differences.
#[derive(Clone, Debug)]
pub struct HomogeneitySpace {
    pub nvars: usize,
    pub basis: Vec<Vec<Rat>>,
    pub dim: usize,
    /// Dimension after quotienting the per-factor all-ones gradings.
    pub projective_dim: usize,
}

pub fn homogeneity_space(sys: &FanSystem) -> HomogeneitySpace {
    let mut constraints: Vec<Vec<Rat>> = Vec::new();
    for rel in &sys.relations {
        let (a0, b0) = rel.monomials[0];
        for &(a, b) in &rel.monomials[1..] {
            let mut row = vec![rat(0); sys.nvars];
            row[a0] += rat(1);
            row[b0] += rat(1);
            row[a] -= rat(1);
            row[b] -= rat(1);
            constraints.push(row);
        }
    }
    let basis = kernel_basis(&constraints, sys.nvars);
    let dim = basis.len();
    HomogeneitySpace {
        nvars: sys.nvars,
        dim,
        projective_dim: dim - sys.dt.steps(),
        basis,
    }
}

/// Exact containment of homogeneity spaces: every basis grading of
/// `inner` must satisfy the defining constraints of `outer`.
pub fn homogeneity_contained(inner: &FanSystem, outer: &FanSystem) -> Result<bool> {
    if inner.nvars != outer.nvars {
        return Err(usage("homogeneity spaces live in different coordinate spaces"));
    }
    let inner_space = homogeneity_space(inner);
    for v in &inner_space.basis {
        for rel in &outer.relations {
            let (a0, b0) = rel.monomials[0];
            let deg0 = v[a0].clone() + &v[b0];
            for &(a, b) in &rel.monomials[1..] {
                if v[a].clone() + &v[b] != deg0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Report of a poset cover scan for two-step flags.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub set: Subset,
    pub added: usize,
    pub homogeneity_contained: bool,
    pub boundary_samples: usize,
    pub boundary_transfers: usize,
}

#[derive(Clone, Debug)]
pub struct PosetReport {
    pub covers: Vec<CoverReport>,
    /// Bottom element: membership in the undegenerate Dressian agrees
    /// with the valuated quotient test on sampled matroid pairs.
    pub bottom_agrees: bool,
    /// Top element: membership with `S = [n]` agrees with the per-factor
    /// Grassmann checks on sampled vector pairs.
    pub top_agrees: bool,
}

/// Verifies the poset corollaries for flags `(r₁, r₂)` on `[n]` along
/// the given covers `S ≺ S ∪ {s}`: exact homogeneity-space containment
/// and transfer of sampled boundary members (`p_I = ∞` whenever `s ∈ I`
/// in the first factor).
pub fn poset_scan(
    ranks: (usize, usize),
    n: usize,
    covers: &[(Subset, Subset)],
    samples_per_cover: usize,
    seed: u64,
) -> Result<PosetReport> {
    let (r1, r2) = ranks;
    if r1 > r2 || r2 > n {
        return Err(usage("ranks must satisfy r₁ ≤ r₂ ≤ n"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut covers_out = Vec::new();
    for (small, big) in covers {
        let added = big.minus(small);
        if !small.is_subset_of(big) || added.len() != 1 {
            return Err(usage(format!("{small} ≺ {big} is not a cover")));
        }
        let s = added.elements()[0];
        let dt_small = DegenerationType::new(n, vec![r1, r2], vec![small.clone()])?;
        let dt_big = DegenerationType::new(n, vec![r1, r2], vec![big.clone()])?;
        let contained = homogeneity_contained(&compile_system(&dt_small)?, &compile_system(&dt_big)?)?;

        let mut transfers = 0;
        for _ in 0..samples_per_cover {
            let (x, nu) = sample_boundary_member(r1, r2, n, small, s, &mut rng)?;
            let cands = [x, nu];
            debug_assert!(ld_flag_dressian_member(&cands, &dt_small, PairMode::AllPairs)?.member);
            if ld_flag_dressian_member(&cands, &dt_big, PairMode::AllPairs)?.member {
                transfers += 1;
            }
        }
        covers_out.push(CoverReport {
            set: small.clone(),
            added: s,
            homogeneity_contained: contained,
            boundary_samples: samples_per_cover,
            boundary_transfers: transfers,
        });
    }

    let bottom_agrees = check_bottom_extreme(ranks, n, &mut rng)?;
    let top_agrees = check_top_extreme(ranks, n, &mut rng)?;
    Ok(PosetReport {
        covers: covers_out,
        bottom_agrees,
        top_agrees,
    })
}

/// Draws a member of `LFlDr((r₁,r₂), S; n) ∩ 𝓑` where `𝓑` forces the
/// first factor to be `∞` on every subset containing `s`. Mixes
/// guaranteed constructions with rejection-sampled generic proposals.
fn sample_boundary_member(
    r1: usize,
    r2: usize,
    n: usize,
    set: &Subset,
    s: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(PlueckerVector, PlueckerVector)> {
    let dt = DegenerationType::new(n, vec![r1, r2], vec![set.clone()])?;
    for _ in 0..400 {
        let strategy = rng.gen_range(0..3u8);
        let candidate: Option<(PlueckerVector, PlueckerVector)> = match strategy {
            // Support of the first factor inside S: every linear
            // degenerate term dies, so any second factor works.
            0 if set.len() >= r1 => {
                let nu = corpus::random_valuated(n, r2, rng, 40).map(|m| m.vector().clone());
                let sub = subsets_inside(set, r1);
                nu.map(|nu| {
                    let map = sub
                        .iter()
                        .map(|b| (b.clone(), TropicalValue::from_int(rng.gen_range(0..=3))))
                        .collect();
                    (
                        PlueckerVector::new(n, r1, map).expect("boundary support vector"),
                        nu,
                    )
                })
            }
            // Second factor with loops on S ∪ {s}: every point of its
            // tropical linear space is ∞ there, so projection is the
            // identity on it. Only usable when the first factor is a
            // point (rank one).
            1 if r1 == 1 && r2 >= 1 && n - set.with(s).len() >= r2 => {
                let loops = set.with(s);
                corpus::random_valuated_with_loops(n, r2, &loops, rng, 40).map(|nu| {
                    let x = corpus::random_rank_one_member(&nu, rng);
                    (x, nu.vector().clone())
                })
            }
            // Generic rejection: random pair, first factor forced ∞ on
            // s-subsets.
            _ => {
                let nu = corpus::random_valuated(n, r2, rng, 40).map(|m| m.vector().clone());
                let mu = corpus::random_valuated_avoiding(n, r1, s, rng, 40)
                    .map(|m| m.vector().clone());
                mu.zip(nu)
            }
        };
        let Some((x, nu)) = candidate else {
            continue;
        };
        // 𝓑 check plus honest membership check.
        let on_boundary = x
            .entries()
            .all(|(b, v)| !b.contains(s) || !v.is_finite());
        if !on_boundary {
            continue;
        }
        if ld_flag_dressian_member(
            &[x.clone(), nu.clone()],
            &dt,
            PairMode::AllPairs,
        )?
        .member
        {
            return Ok((x, nu));
        }
    }
    Err(internal(format!(
        "boundary sampler starved for S={set}, s={s}, ranks ({r1},{r2})"
    )))
}

fn subsets_inside(set: &Subset, k: usize) -> Vec<Subset> {
    crate::sets::subsets_of(set.elements(), k)
}

fn check_bottom_extreme(ranks: (usize, usize), n: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    let dt = DegenerationType::new(n, vec![ranks.0, ranks.1], vec![Subset::empty()])?;
    for _ in 0..20 {
        let Some(mu) = corpus::random_valuated(n, ranks.0, rng, 40) else {
            continue;
        };
        let Some(nu) = corpus::random_valuated(n, ranks.1, rng, 40) else {
            continue;
        };
        let member = ld_flag_dressian_member(
            &[mu.vector().clone(), nu.vector().clone()],
            &dt,
            PairMode::AllPairs,
        )?
        .member;
        let quotient = crate::quotient::quotient_check(&mu, &nu)?;
        if member != quotient {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_top_extreme(ranks: (usize, usize), n: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    let full = Subset::new((1..=n).collect());
    let dt = DegenerationType::new(n, vec![ranks.0, ranks.1], vec![full])?;
    for _ in 0..20 {
        // Unvalidated random vectors: both members and non-members.
        let mu = corpus::random_vector(n, ranks.0, rng);
        let nu = corpus::random_vector(n, ranks.1, rng);
        let member =
            ld_flag_dressian_member(&[mu.clone(), nu.clone()], &dt, PairMode::AllPairs)?.member;
        let mut grassmann = true;
        for (vector, r) in [(&mu, ranks.0), (&nu, ranks.1)] {
            for rel in generate_grassmann_relations(r, n)? {
                if !relation_satisfied(&rel, vector, vector)? {
                    grassmann = false;
                }
            }
        }
        if member != grassmann {
            return Ok(false);
        }
    }
    Ok(true)
}

/// H-description of a cone: primitive equality rows and the deduplicated
/// nonzero tie inequalities (`tie − other ≤ 0`), reduced modulo the
/// equality span.
pub fn cone_h_description(sys: &FanSystem, cone: &Cone) -> (Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let mut eq = cone.eq_rref.clone();
    let pivots = rref(&mut eq);
    let equalities: Vec<Vec<Rat>> = eq.iter().map(|r| primitive(r)).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut inequalities = Vec::new();
    for (ties, rel) in cone.pattern.iter().zip(&sys.relations) {
        let rep = &rel.terms[ties[0]];
        for t in (0..rel.terms.len()).filter(|t| !ties.contains(t)) {
            let diff: Vec<Rat> = rep.iter().zip(&rel.terms[t]).map(|(a, b)| a - b).collect();
            let g = primitive(&reduce_mod_rows(&diff, &eq, &pivots));
            if g.iter().any(|c| *c != rat(0)) && seen.insert(g.clone()) {
                inequalities.push(g);
            }
        }
    }
    (equalities, inequalities)
}

/// Renders a compact text summary, one line per headline quantity.
pub fn summary_text(s: &FanSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ambient dimension: {}", s.ambient_dim);
    if s.is_empty {
        let _ = writeln!(out, "finite stratum: empty");
        return out;
    }
    let _ = writeln!(out, "lineality dimension: {}", s.lineality_dim.unwrap_or(0));
    let _ = writeln!(out, "homogeneity dimension: {}", s.homogeneity_dim);
    let _ = writeln!(
        out,
        "f-vector: ({})",
        s.f_vector
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let _ = writeln!(out, "maximal cones: {}", s.maximal_cones);
    let _ = writeln!(out, "simplicial: {}", s.simplicial);
    let _ = writeln!(out, "nodes visited: {}", s.nodes_visited);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fldr(ranks: Vec<usize>, sets: Vec<Subset>, n: usize) -> FanResult {
        let dt = DegenerationType::new(n, ranks, sets).unwrap();
        let sys = compile_system(&dt).unwrap();
        enumerate_prevariety(&sys, &EnumerationOptions::default()).unwrap()
    }

    #[test]
    fn single_grassmann_relation_fan() {
        // 𝒫^trop_{2;4} alone: three maximal cones, projective lineality 3,
        // f-vector (1,3).
        let dt = DegenerationType::new(4, vec![2], vec![]).unwrap();
        let sys = compile_system(&dt).unwrap();
        assert_eq!(sys.relations.len(), 1);
        let fan = enumerate_prevariety(&sys, &EnumerationOptions::default()).unwrap();
        assert_eq!(fan.summary.lineality_dim, Some(3));
        assert_eq!(fan.summary.f_vector, vec![1, 3]);
        assert_eq!(fan.summary.maximal_cones, 3);
        assert_eq!(fan.summary.homogeneity_dim, 3);
    }

    #[test]
    fn flag_dressian_1_2_4_is_petersen() {
        let fan = fldr(vec![1, 2], vec![Subset::empty()], 4);
        assert_eq!(fan.summary.lineality_dim, Some(3));
        assert_eq!(fan.summary.f_vector, vec![1, 10, 15]);
        assert_eq!(fan.summary.maximal_cones, 15);
        assert!(fan.summary.homogeneity_equals_lineality);
        assert_eq!(fan.summary.rays.len(), 10);
    }

    #[test]
    fn degenerate_flag_dressian_1_2_4() {
        let fan = fldr(vec![1, 2], vec![Subset::new(vec![1])], 4);
        assert_eq!(fan.summary.lineality_dim, Some(4));
        assert_eq!(fan.summary.f_vector, vec![1, 3]);
        assert_eq!(fan.summary.maximal_cones, 3);
        assert!(fan.summary.homogeneity_equals_lineality);
    }

    #[test]
    fn f_vector_invariant_under_relation_reordering() {
        let dt = DegenerationType::new(4, vec![1, 2], vec![Subset::empty()]).unwrap();
        let mut sys = compile_system(&dt).unwrap();
        let base = enumerate_prevariety(&sys, &EnumerationOptions::default())
            .unwrap()
            .summary
            .f_vector;
        sys.relations.reverse();
        let reversed = enumerate_prevariety(&sys, &EnumerationOptions::default())
            .unwrap()
            .summary
            .f_vector;
        assert_eq!(base, reversed);
        sys.relations.rotate_left(2);
        let rotated = enumerate_prevariety(&sys, &EnumerationOptions::default())
            .unwrap()
            .summary
            .f_vector;
        assert_eq!(base, rotated);
    }

    #[test]
    fn membership_matches_enumerated_cones() {
        // A rational point lies in some cone iff every relation holds.
        let dt = DegenerationType::new(4, vec![1, 2], vec![Subset::new(vec![1])]).unwrap();
        let sys = compile_system(&dt).unwrap();
        let fan = enumerate_prevariety(&sys, &EnumerationOptions::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let x: Vec<Rat> = (0..sys.nvars).map(|_| rat(rng.gen_range(-2..=2))).collect();
            let satisfied = sys.relations.iter().all(|rel| {
                let values: Vec<Rat> = rel.terms.iter().map(|t| dot(t, &x)).collect();
                let min = values.iter().min().unwrap();
                values.iter().filter(|v| *v == min).count() >= 2
            });
            let in_cone = fan.cones.iter().any(|c| {
                let on_eqs = c.eq_rref.iter().all(|row| dot(row, &x) == rat(0));
                let in_ineqs = c.pattern.iter().zip(&sys.relations).all(|(ties, rel)| {
                    let tie_val = dot(&rel.terms[ties[0]], &x);
                    rel.terms.iter().map(|t| dot(t, &x)).all(|v| v >= tie_val)
                });
                on_eqs && in_ineqs
            });
            assert_eq!(satisfied, in_cone);
        }
    }

    #[test]
    fn empty_finite_stratum() {
        // r₁ = r₂ = 1 with S = {1}: relations p_a p_b with a single term
        // survive, which no finite point satisfies.
        let dt = DegenerationType::new(3, vec![1, 1], vec![Subset::new(vec![1])]).unwrap();
        let sys = compile_system(&dt).unwrap();
        assert!(sys.relations.iter().any(|r| r.terms.len() == 1));
        let fan = enumerate_prevariety(&sys, &EnumerationOptions::default()).unwrap();
        assert!(fan.summary.is_empty);
        assert!(fan.summary.f_vector.is_empty());
    }

    #[test]
    fn budget_is_respected() {
        let dt = DegenerationType::new(4, vec![1, 2], vec![Subset::empty()]).unwrap();
        let sys = compile_system(&dt).unwrap();
        let out = enumerate_prevariety(
            &sys,
            &EnumerationOptions {
                budget: 10,
                time_limit: None,
                progress: false,
            },
        );
        assert!(matches!(out, Err(Error::Budget(_))));
    }

    #[test]
    fn homogeneity_of_single_relation() {
        let dt = DegenerationType::new(4, vec![2], vec![]).unwrap();
        let sys = compile_system(&dt).unwrap();
        let h = homogeneity_space(&sys);
        assert_eq!(h.projective_dim, 3);
    }

    #[test]
    fn poset_scan_small() {
        let covers = vec![
            (Subset::empty(), Subset::new(vec![1])),
            (Subset::new(vec![1]), Subset::new(vec![1, 2])),
        ];
        let report = poset_scan((1, 2), 4, &covers, 10, 17).unwrap();
        assert!(report.bottom_agrees);
        assert!(report.top_agrees);
        for c in &report.covers {
            assert!(c.homogeneity_contained);
            assert_eq!(c.boundary_transfers, c.boundary_samples);
        }
        // Non-cover pairs are rejected.
        assert!(poset_scan(
            (1, 2),
            4,
            &[(Subset::empty(), Subset::new(vec![1, 2]))],
            1,
            0
        )
        .is_err());
    }
}
