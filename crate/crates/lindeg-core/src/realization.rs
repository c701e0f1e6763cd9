//! The valued field of finite ℚ-combinations of rational powers of `t`,
//! exact Plücker minors, classical linear degenerate Plücker
//! verification, and construction of simultaneous realizations.
//!
//! An element is a finite sum `Σ c·t^q` with `c, q ∈ ℚ`; its valuation is
//! the minimum exponent (`val(0) = ∞`). Minors are computed by
//! fraction-free Bareiss elimination, whose divisions are exact in the
//! monomial ring.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{domain, internal, usage, Result};
use crate::matroid::{PlueckerVector, ValuatedMatroid};
use crate::rat::{parse_rat, rat, Rat};
use crate::relations::{generate_signed_relations, DegenerationType, SignedRelation};
use crate::sets::{subsets, Subset};
use crate::trop::TropicalValue;

/// A finite sum `Σ c·t^q` with rational exponents and coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentElement {
    /// exponent → nonzero coefficient
    terms: BTreeMap<Rat, Rat>,
}

impl LaurentElement {
    pub fn zero() -> Self {
        LaurentElement::default()
    }

    pub fn one() -> Self {
        LaurentElement::monomial(rat(1), rat(0))
    }

    pub fn monomial(coefficient: Rat, exponent: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if coefficient != rat(0) {
            terms.insert(exponent, coefficient);
        }
        LaurentElement { terms }
    }

    pub fn constant(c: i64) -> Self {
        LaurentElement::monomial(rat(c), rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Rat)> {
        self.terms.iter()
    }

    /// `val(f)` = minimum exponent; `val(0) = ∞`.
    pub fn valuation(&self) -> TropicalValue {
        match self.terms.keys().next() {
            Some(e) => TropicalValue::Finite(e.clone()),
            None => TropicalValue::Infinity,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(|| rat(0));
            *entry += c;
            if *entry == rat(0) {
                terms.remove(e);
            }
        }
        LaurentElement { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentElement {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Rat, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(|| rat(0));
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| *c != rat(0));
        LaurentElement { terms }
    }

    /// Exact division by long division on the lowest-exponent terms.
    /// Fails when the divisor is zero or the remainder does not vanish —
    /// inside Bareiss elimination the division is always exact.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(domain("division by the zero Laurent element"));
        }
        let (lead_e, lead_c) = divisor.terms.iter().next().expect("nonzero divisor");
        let mut remainder = self.clone();
        let mut quotient = LaurentElement::zero();
        while !remainder.is_zero() {
            let (re, rc) = {
                let (e, c) = remainder.terms.iter().next().expect("nonzero remainder");
                (e.clone(), c.clone())
            };
            let q = LaurentElement::monomial(&rc / lead_c, &re - lead_e);
            quotient = quotient.add(&q);
            remainder = remainder.sub(&q.mul(divisor));
            if let Some((new_e, _)) = remainder.terms.iter().next() {
                if *new_e <= re {
                    return Err(internal(format!(
                        "inexact Laurent division: {self} by {divisor}"
                    )));
                }
            }
        }
        Ok(quotient)
    }

    /// Parses expressions like `t^1 + 3*t^-1/2 - 2`.
    pub fn parse(input: &str) -> Result<Self> {
        let mut out = LaurentElement::zero();
        let mut rest = input.trim();
        if rest.is_empty() {
            return Err(usage("empty Laurent expression"));
        }
        let mut sign = 1i64;
        let mut first = true;
        while !rest.is_empty() {
            if !first || rest.starts_with('+') || rest.starts_with('-') {
                let (s, tail) = rest.split_at(1);
                match s {
                    "+" => sign = 1,
                    "-" => sign = -1,
                    _ => return Err(usage(format!("expected '+' or '-' at '{rest}'"))),
                }
                rest = tail.trim_start();
            }
            first = false;
            // term: [coef][*][t[^exp]]
            let term_end = rest
                .char_indices()
                .find(|(i, c)| (*c == '+' || *c == '-') && !is_exponent_sign(rest, *i))
                .map_or(rest.len(), |(i, _)| i);
            let term = rest[..term_end].trim();
            rest = rest[term_end..].trim_start();
            if term.is_empty() {
                return Err(usage("dangling sign in Laurent expression"));
            }
            let (coefficient, exponent) = parse_term(term)?;
            out = out.add(&LaurentElement::monomial(
                coefficient * rat(sign),
                exponent,
            ));
        }
        Ok(out)
    }
}

fn is_exponent_sign(s: &str, i: usize) -> bool {
    // A '-' directly after '^' belongs to the exponent, as in t^-1/2.
    i > 0 && s.as_bytes()[i - 1] == b'^'
}

fn parse_term(term: &str) -> Result<(Rat, Rat)> {
    if let Some(t_pos) = term.find('t') {
        let coef_part = term[..t_pos].trim().trim_end_matches('*').trim();
        let coefficient = if coef_part.is_empty() {
            rat(1)
        } else {
            parse_rat(coef_part)?
        };
        let after = term[t_pos + 1..].trim();
        let exponent = if after.is_empty() {
            rat(1)
        } else if let Some(e) = after.strip_prefix('^') {
            parse_rat(e.trim())?
        } else {
            return Err(usage(format!("malformed monomial '{term}'")));
        };
        Ok((coefficient, exponent))
    } else {
        Ok((parse_rat(term)?, rat(0)))
    }
}

impl fmt::Display for LaurentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *e == rat(0) {
                write!(f, "{c}")?;
            } else if *c == rat(1) {
                write!(f, "t^{e}")?;
            } else {
                write!(f, "{c}*t^{e}")?;
            }
        }
        Ok(())
    }
}

/// An `r × n` matrix over the Laurent monomial field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValuedMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<LaurentElement>>,
}

impl ValuedMatrix {
    pub fn new(entries: Vec<Vec<LaurentElement>>) -> Result<Self> {
        let rows = entries.len();
        if rows == 0 {
            return Err(usage("matrix must have at least one row"));
        }
        let cols = entries[0].len();
        if cols == 0 || entries.iter().any(|r| r.len() != cols) {
            return Err(usage("ragged or empty matrix"));
        }
        Ok(ValuedMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentElement {
        &self.entries[row - 1][col - 1]
    }

    pub fn row(&self, row: usize) -> &[LaurentElement] {
        &self.entries[row - 1]
    }

    /// Stacks `self` on top of `other` (equal column counts).
    pub fn stacked(&self, other: &ValuedMatrix) -> Result<ValuedMatrix> {
        if self.cols != other.cols {
            return Err(usage("column counts differ"));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        ValuedMatrix::new(entries)
    }

    /// Fraction-free Bareiss elimination; returns the rank.
    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        let (m, n) = (self.rows, self.cols);
        let mut prev = LaurentElement::one();
        let mut pivot_row = 0usize;
        for col in 0..n {
            if pivot_row == m {
                break;
            }
            let Some(found) = (pivot_row..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pivot_row, found);
            for r in pivot_row + 1..m {
                for c in col + 1..n {
                    let num = a[pivot_row][col]
                        .mul(&a[r][c])
                        .sub(&a[r][col].mul(&a[pivot_row][c]));
                    a[r][c] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact");
                }
                a[r][col] = LaurentElement::zero();
            }
            prev = a[pivot_row][col].clone();
            pivot_row += 1;
        }
        pivot_row
    }

    /// Determinant of the square submatrix given by 1-based column
    /// indices, by Bareiss elimination.
    pub fn minor(&self, cols: &Subset) -> Result<LaurentElement> {
        if cols.len() != self.rows {
            return Err(usage(format!(
                "minor needs {} columns, got {}",
                self.rows,
                cols.len()
            )));
        }
        let k = self.rows;
        let mut a: Vec<Vec<LaurentElement>> = (0..k)
            .map(|r| cols.iter().map(|c| self.entries[r][c - 1].clone()).collect())
            .collect();
        let mut prev = LaurentElement::one();
        let mut sign_flip = false;
        for col in 0..k {
            let Some(found) = (col..k).find(|&r| !a[r][col].is_zero()) else {
                return Ok(LaurentElement::zero());
            };
            if found != col {
                a.swap(col, found);
                sign_flip = !sign_flip;
            }
            for r in col + 1..k {
                for c in col + 1..k {
                    let num = a[col][col].mul(&a[r][c]).sub(&a[r][col].mul(&a[col][c]));
                    a[r][c] = num.div_exact(&prev)?;
                }
                a[r][col] = LaurentElement::zero();
            }
            prev = a[col][col].clone();
        }
        let det = a[k - 1][k - 1].clone();
        Ok(if sign_flip { det.neg() } else { det })
    }

    /// Determinant by Leibniz expansion; cross-check oracle for small
    /// matrices.
    pub fn minor_leibniz(&self, cols: &Subset) -> Result<LaurentElement> {
        use itertools::Itertools;
        if cols.len() != self.rows {
            return Err(usage("column count must equal the row count"));
        }
        let idx: Vec<usize> = cols.iter().collect();
        let k = self.rows;
        let mut det = LaurentElement::zero();
        for perm in (0..k).permutations(k) {
            let mut inversions = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let mut prod = LaurentElement::one();
            for (r, &p) in perm.iter().enumerate() {
                prod = prod.mul(&self.entries[r][idx[p] - 1]);
            }
            det = if inversions % 2 == 0 {
                det.add(&prod)
            } else {
                det.sub(&prod)
            };
        }
        Ok(det)
    }
}

impl fmt::Display for ValuedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.rows {
            write!(f, "[")?;
            for c in 1..=self.cols {
                if c > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Classical and tropical Plücker vectors of a full-row-rank matrix. The
/// tropical side is the coordinatewise valuation, normalized, and passes
/// the exchange axiom by construction.
pub fn pluecker_vector(
    a: &ValuedMatrix,
) -> Result<(BTreeMap<Subset, LaurentElement>, ValuatedMatroid)> {
    if a.rank() != a.rows() {
        return Err(domain(format!(
            "matrix of rank {} is not of full row rank {}",
            a.rank(),
            a.rows()
        )));
    }
    let mut classical = BTreeMap::new();
    let mut tropical = BTreeMap::new();
    for cols in subsets(a.cols(), a.rows()) {
        let det = a.minor(&cols)?;
        tropical.insert(cols.clone(), det.valuation());
        classical.insert(cols, det);
    }
    let pv = PlueckerVector::new(a.cols(), a.rows(), tropical)?;
    let vm = ValuatedMatroid::from_vector(pv).map_err(|e| {
        internal(format!("tropicalized Plücker vector fails the exchange axiom: {e}"))
    })?;
    Ok((classical, vm))
}

/// Replaces the columns indexed by `S` with zero columns; the row space
/// becomes `pr_S` of the original row space.
pub fn project_matrix(a: &ValuedMatrix, s: &Subset) -> ValuedMatrix {
    let entries = (1..=a.rows())
        .map(|r| {
            (1..=a.cols())
                .map(|c| {
                    if s.contains(c) {
                        LaurentElement::zero()
                    } else {
                        a.entry(r, c).clone()
                    }
                })
                .collect()
        })
        .collect();
    ValuedMatrix::new(entries).expect("projection preserves the shape")
}

/// True iff every row of `a` lies in the row space of `b`, decided by
/// exact rank comparison `rank([b; a]) = rank(b)`.
pub fn rowspace_contains(b: &ValuedMatrix, a: &ValuedMatrix) -> Result<bool> {
    let stacked = b.stacked(a)?;
    Ok(stacked.rank() == b.rank())
}

fn evaluate_signed(
    rel: &SignedRelation,
    q: &BTreeMap<Subset, LaurentElement>,
    p: &BTreeMap<Subset, LaurentElement>,
) -> LaurentElement {
    let mut acc = LaurentElement::zero();
    for (c, a, b) in &rel.terms {
        debug_assert!(c.abs() == 1, "merged Plücker coefficients are ±1");
        let prod = q[a].mul(&p[b]);
        acc = if *c < 0 { acc.sub(&prod) } else { acc.add(&prod) };
    }
    acc
}

/// Evaluates every classical relation of `𝒫_{r,s;S;n}` on the Plücker
/// coordinates of `a` and `b`. The result is checked against the
/// geometric statement `pr_S(rowspace(a)) ⊆ rowspace(b)` on every call —
/// the two must coincide.
pub fn verify_classical_ld_relations(a: &ValuedMatrix, b: &ValuedMatrix, s: &Subset) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(usage("matrices on different column counts"));
    }
    let n = a.cols();
    let (pa, _) = pluecker_vector(a)?;
    let (pb, _) = pluecker_vector(b)?;
    let relations = generate_signed_relations(a.rows(), b.rows(), s, n)?;
    let algebraic = relations
        .iter()
        .all(|rel| evaluate_signed(rel, &pa, &pb).is_zero());
    let geometric = rowspace_contains(b, &project_matrix(a, s))?;
    if algebraic != geometric {
        return Err(internal(format!(
            "linear degenerate Plücker relations ({algebraic}) disagree with row space containment ({geometric}) for S={s}"
        )));
    }
    Ok(algebraic)
}

/// The two matrices of the closing counterexample with `a = 1`, `b = 2`:
/// `A₁ = (1 1 1 1)` and `A₂ = ((1,1,1,1), (t, 0, t², 1))`.
pub fn counterexample_matrices() -> (ValuedMatrix, ValuedMatrix) {
    let one = LaurentElement::one;
    let a1 = ValuedMatrix::new(vec![vec![one(), one(), one(), one()]]).unwrap();
    let a2 = ValuedMatrix::new(vec![
        vec![one(), one(), one(), one()],
        vec![
            LaurentElement::monomial(rat(1), rat(1)),
            LaurentElement::zero(),
            LaurentElement::monomial(rat(1), rat(2)),
            one(),
        ],
    ])
    .unwrap();
    (a1, a2)
}

/// Builds random matrices `L_1, …, L_k` with `pr_{S_i}(L_i) ⊆ L_{i+1}`
/// and full ranks `r_i`, by extending each projected span with random
/// monomial rows. Exponents are drawn from `exp_range`, coefficients are
/// small nonzero integers.
pub fn random_ld_realization(
    dt: &DegenerationType,
    exp_range: (i64, i64),
    rng: &mut impl Rng,
) -> Result<Vec<ValuedMatrix>> {
    if exp_range.0 > exp_range.1 {
        return Err(usage("empty exponent range"));
    }
    if dt.ranks()[0] == 0 {
        return Err(domain("rank-zero factors have no realizing matrix"));
    }

    fn random_row(n: usize, exp_range: (i64, i64), rng: &mut impl Rng) -> Vec<LaurentElement> {
        (0..n)
            .map(|_| {
                let coefficient = loop {
                    let c = rng.gen_range(-3i64..=3);
                    if c != 0 {
                        break c;
                    }
                };
                // Half-integer exponents keep the range rational but small.
                let num = rng.gen_range(exp_range.0 * 2..=exp_range.1 * 2);
                LaurentElement::monomial(rat(coefficient), Rat::new(num.into(), 2.into()))
            })
            .collect()
    }

    // Greedily keeps the rows that grow the rank; a maximal independent
    // subset spans the same row space.
    fn independent_rows(rows: &[Vec<LaurentElement>]) -> Result<Vec<Vec<LaurentElement>>> {
        let mut kept: Vec<Vec<LaurentElement>> = Vec::new();
        for row in rows {
            let mut candidate = kept.clone();
            candidate.push(row.clone());
            if ValuedMatrix::new(candidate.clone())?.rank() == candidate.len() {
                kept = candidate;
            }
        }
        Ok(kept)
    }

    let n = dt.n();
    let mut out: Vec<ValuedMatrix> = Vec::new();
    for (idx, &r) in dt.ranks().iter().enumerate() {
        let base_rows: Vec<Vec<LaurentElement>> = if idx == 0 {
            Vec::new()
        } else {
            let projected = project_matrix(&out[idx - 1], &dt.sets()[idx - 1]);
            let rows: Vec<Vec<LaurentElement>> =
                (1..=projected.rows()).map(|i| projected.row(i).to_vec()).collect();
            independent_rows(&rows)?
        };
        if base_rows.len() > r {
            return Err(domain(format!(
                "rank {r} at step {} is below the projected span of rank {}",
                idx + 1,
                base_rows.len()
            )));
        }
        let mut attempts = 0;
        let matrix = loop {
            attempts += 1;
            if attempts > 200 {
                return Err(internal("could not reach the requested rank with random rows"));
            }
            let mut rows = base_rows.clone();
            while rows.len() < r {
                rows.push(random_row(n, exp_range, rng));
            }
            let candidate = ValuedMatrix::new(rows)?;
            if candidate.rank() == r {
                break candidate;
            }
        };
        out.push(matrix);
    }
    // By construction every step satisfies the containment; fail loudly
    // if not.
    for i in 0..out.len().saturating_sub(1) {
        if !rowspace_contains(&out[i + 1], &project_matrix(&out[i], &dt.sets()[i]))? {
            return Err(internal("constructed realization violates containment"));
        }
    }
    Ok(out)
}
