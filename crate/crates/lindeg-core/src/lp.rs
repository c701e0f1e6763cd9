//! Exact rational linear programming and supporting linear algebra.
//!
//! A small dense two-phase simplex over `BigRational` with Bland's rule,
//! which guarantees termination without any numerical tolerance. Sizes
//! here are tiny (tens of variables), so the full-tableau method is the
//! right tool. Fourier–Motzkin elimination doubles as an independent
//! feasibility oracle for cross-checks.

use crate::rat::{rat, Rat};

/// Outcome of `maximize c·x  s.t.  Ex = e, Ax ≤ b` with `x` free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LpOutcome {
    Optimal { value: Rat, point: Vec<Rat> },
    Unbounded,
    Infeasible,
}

struct Tableau {
    /// m rows of length `ncols + 1`; the last entry is the RHS.
    rows: Vec<Vec<Rat>>,
    /// Reduced-cost row of length `ncols + 1`; last entry is the
    /// current objective value.
    cost: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v /= &p;
        }
        for r in 0..self.rows.len() {
            if r == row {
                continue;
            }
            let factor = self.rows[r][col].clone();
            if factor == rat(0) {
                continue;
            }
            for c in 0..=self.ncols {
                let delta = &self.rows[row][c] * &factor;
                self.rows[r][c] -= delta;
            }
        }
        let factor = self.cost[col].clone();
        if factor != rat(0) {
            for c in 0..=self.ncols {
                let delta = &self.rows[row][c] * &factor;
                self.cost[c] -= delta;
            }
        }
        self.basis[row] = col;
    }

    /// Bland's rule: entering = smallest column with positive reduced
    /// cost; leaving = smallest basic index among the minimum ratios.
    /// Columns in `banned` are never entered.
    fn run(&mut self, banned: &[bool]) -> bool {
        loop {
            let entering = (0..self.ncols)
                .find(|&j| !banned[j] && self.cost[j] > rat(0));
            let Some(col) = entering else {
                return true; // optimal
            };
            let mut best: Option<(Rat, usize, usize)> = None; // ratio, basis var, row
            for r in 0..self.rows.len() {
                if self.rows[r][col] > rat(0) {
                    let ratio = &self.rows[r][self.ncols] / &self.rows[r][col];
                    let key = (ratio, self.basis[r], r);
                    if best.as_ref().is_none_or(|b| (key.0.clone(), key.1) < (b.0.clone(), b.1)) {
                        best = Some(key);
                    }
                }
            }
            let Some((_, _, row)) = best else {
                return false; // unbounded
            };
            self.pivot(row, col);
        }
    }
}

/// Maximizes `objective · x` over `{ x free : eq·x = e, ineq·x ≤ b }`.
pub fn solve_lp(
    objective: &[Rat],
    eqs: &[(Vec<Rat>, Rat)],
    ineqs: &[(Vec<Rat>, Rat)],
) -> LpOutcome {
    let d = objective.len();
    let m = eqs.len() + ineqs.len();
    // Columns: x⁺ (d), x⁻ (d), slacks (#ineqs), artificials (m).
    let nslack = ineqs.len();
    let ncols = 2 * d + nslack + m;

    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let build_row = |coeffs: &[Rat], slack: Option<usize>, art: usize, rhs: &Rat| {
        let mut row = vec![rat(0); ncols + 1];
        for (j, c) in coeffs.iter().enumerate() {
            row[j] = c.clone();
            row[d + j] = -c.clone();
        }
        if let Some(s) = slack {
            row[2 * d + s] = rat(1);
        }
        row[2 * d + nslack + art] = rat(1);
        row[ncols] = rhs.clone();
        row
    };
    let mut art = 0;
    for (coeffs, rhs) in eqs {
        let mut row = build_row(coeffs, None, art, rhs);
        if row[ncols] < rat(0) {
            for (c, v) in row.iter_mut().enumerate() {
                if c != 2 * d + nslack + art {
                    *v = -v.clone();
                }
            }
        }
        rows.push(row);
        art += 1;
    }
    for (s, (coeffs, rhs)) in ineqs.iter().enumerate() {
        let mut row = build_row(coeffs, Some(s), art, rhs);
        if row[ncols] < rat(0) {
            for (c, v) in row.iter_mut().enumerate() {
                if c != 2 * d + nslack + art {
                    *v = -v.clone();
                }
            }
        }
        rows.push(row);
        art += 1;
    }

    let basis: Vec<usize> = (0..m).map(|i| 2 * d + nslack + i).collect();

    // Phase 1: maximize −Σ artificials. Reduced costs start as the sum of
    // the constraint rows on non-artificial columns.
    let mut cost = vec![rat(0); ncols + 1];
    for row in &rows {
        for (c, (acc, v)) in cost.iter_mut().zip(row).enumerate() {
            if c < 2 * d + nslack {
                *acc += v;
            }
        }
        cost[ncols] += &row[ncols];
    }
    // Value column tracks Σ b over basic artificials; stored negated at
    // the end of phase 1 via the usual invariant.
    let mut t = Tableau {
        rows,
        cost,
        basis,
        ncols,
    };
    let banned: Vec<bool> = (0..ncols).map(|j| j >= 2 * d + nslack).collect();
    t.run(&banned);
    if t.cost[ncols] != rat(0) {
        return LpOutcome::Infeasible;
    }
    // Drive leftover artificials out of the basis where possible.
    for r in 0..t.rows.len() {
        if t.basis[r] >= 2 * d + nslack {
            if let Some(col) = (0..2 * d + nslack).find(|&c| t.rows[r][c] != rat(0)) {
                t.pivot(r, col);
            }
        }
    }

    // Phase 2 objective over x⁺, x⁻; artificial columns stay banned.
    let mut cost = vec![rat(0); ncols + 1];
    for (j, c) in objective.iter().enumerate() {
        cost[j] = c.clone();
        cost[d + j] = -c.clone();
    }
    // Express in terms of the current basis.
    for r in 0..t.rows.len() {
        let b = t.basis[r];
        if cost[b] != rat(0) {
            let factor = cost[b].clone();
            for (acc, v) in cost.iter_mut().zip(&t.rows[r]) {
                let delta = v * &factor;
                *acc -= delta;
            }
        }
    }
    t.cost = cost;
    if !t.run(&banned) {
        return LpOutcome::Unbounded;
    }

    let mut x = vec![rat(0); 2 * d + nslack];
    for (r, &b) in t.basis.iter().enumerate() {
        if b < 2 * d + nslack {
            x[b] = t.rows[r][ncols].clone();
        }
    }
    let point: Vec<Rat> = (0..d).map(|j| &x[j] - &x[d + j]).collect();
    let value = objective
        .iter()
        .zip(&point)
        .fold(rat(0), |acc, (c, v)| acc + c * v);
    LpOutcome::Optimal { value, point }
}

/// Is there an `x` with `eq·x = 0` for all equalities and
/// `form·x ≤ −1` for all inequality forms? This is the scale-invariant
/// version of strict feasibility of the homogeneous system
/// `{eq·x = 0, form·x < 0}`. Returns a witness.
pub fn strictly_feasible(eqs: &[Vec<Rat>], forms: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    let d = eqs.iter().chain(forms).map(Vec::len).max().unwrap_or(0);
    if forms.is_empty() {
        return Some(vec![rat(0); d]);
    }
    let eqs: Vec<(Vec<Rat>, Rat)> = eqs.iter().map(|e| (e.clone(), rat(0))).collect();
    let ineqs: Vec<(Vec<Rat>, Rat)> = forms.iter().map(|f| (f.clone(), rat(-1))).collect();
    match solve_lp(&vec![rat(0); d], &eqs, &ineqs) {
        LpOutcome::Optimal { point, .. } => Some(point),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("constant objective cannot be unbounded"),
    }
}

/// Fourier–Motzkin elimination deciding `∃x: row·x ≤ rhs` for every row.
/// Exponential in the worst case; used as an independent oracle on small
/// systems.
pub fn fm_feasible(ineqs: &[(Vec<Rat>, Rat)], dim: usize) -> bool {
    let mut system: Vec<(Vec<Rat>, Rat)> = ineqs
        .iter()
        .map(|(c, b)| {
            let mut c = c.clone();
            c.resize(dim, rat(0));
            (c, b.clone())
        })
        .collect();
    for var in 0..dim {
        let (zero, nonzero): (Vec<_>, Vec<_>) =
            system.into_iter().partition(|(c, _)| c[var] == rat(0));
        let mut next = zero;
        let (pos, neg): (Vec<_>, Vec<_>) = nonzero.into_iter().partition(|(c, _)| c[var] > rat(0));
        for (pc, pb) in &pos {
            for (nc, nb) in &neg {
                // pc·x ≤ pb with pc[var] > 0 and nc·x ≤ nb with nc[var] < 0:
                // scale and add to cancel var.
                let alpha = -&nc[var]; // > 0
                let beta = pc[var].clone(); // > 0
                let coeffs: Vec<Rat> = pc
                    .iter()
                    .zip(nc)
                    .map(|(p, n)| p * &alpha + n * &beta)
                    .collect();
                let rhs = pb * &alpha + nb * &beta;
                next.push((coeffs, rhs));
            }
        }
        system = next;
    }
    system.iter().all(|(_, b)| *b >= rat(0))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(matrix: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = matrix[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| matrix[i][c] != rat(0)) else {
            continue;
        };
        matrix.swap(r, p);
        let inv = matrix[r][c].clone();
        for v in matrix[r].iter_mut() {
            *v /= &inv;
        }
        for i in 0..rows {
            if i != r && matrix[i][c] != rat(0) {
                let factor = matrix[i][c].clone();
                let pivot_row = matrix[r].clone();
                for (x, p) in matrix[i].iter_mut().zip(&pivot_row) {
                    let delta = p * &factor;
                    *x -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    matrix.truncate(r);
    pivots
}

pub fn rank(matrix: &[Vec<Rat>]) -> usize {
    let mut m = matrix.to_vec();
    rref(&mut m).len()
}

/// A basis of the kernel `{ v : row · v = 0 ∀ rows }`, one vector per
/// free column of the RREF. Canonical given the input order.
pub fn kernel_basis(matrix: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = matrix
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(dim, rat(0));
            r
        })
        .collect();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![rat(0); dim];
        v[free] = rat(1);
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Is `v` in the row space of `matrix`?
pub fn in_row_space(v: &[Rat], matrix: &[Vec<Rat>]) -> bool {
    let mut m = matrix.to_vec();
    m.push(v.to_vec());
    rank(&m) == rank(matrix)
}

/// Reduces `form` modulo the row space of an RREF basis: subtracts
/// multiples of the basis rows to zero out the pivot coordinates.
pub fn reduce_mod_rows(form: &[Rat], rref_rows: &[Vec<Rat>], pivots: &[usize]) -> Vec<Rat> {
    let mut out = form.to_vec();
    for (row, &p) in rref_rows.iter().zip(pivots) {
        let factor = out[p].clone();
        if factor != rat(0) {
            for (o, r) in out.iter_mut().zip(row) {
                let delta = r * &factor;
                *o -= delta;
            }
        }
    }
    out
}

/// Scales a rational vector to a primitive integer vector, preserving
/// orientation. Returns zero vectors unchanged.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    use num::Integer;
    let mut denom_lcm = num::BigInt::from(1);
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let scaled: Vec<num::BigInt> = v.iter().map(|x| x.numer() * &denom_lcm / x.denom()).collect();
    let mut g = num::BigInt::from(0);
    for s in &scaled {
        g = g.gcd(s);
    }
    if g == num::BigInt::from(0) {
        return v.to_vec();
    }
    scaled
        .into_iter()
        .map(|s| Rat::from_integer(s / &g))
        .collect()
}
