//! Exact two-phase simplex over `BigRational` with Bland's anti-cycling rule.
//!
//! Problems here have a handful of rows and at most a few dozen columns, so a
//! dense tableau is the simplest thing that works.

use num::{BigRational, Signed, Zero};

pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x  (<= | >= | =)  rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
}

/// Minimizes `objective · x` subject to `constraints` and `x >= 0`.
pub fn minimize(num_vars: usize, objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    assert_eq!(
        objective.len(),
        num_vars,
        "objective length must equal the variable count"
    );
    let mut tableau = Tableau::build(num_vars, constraints);
    if !tableau.phase_one() {
        return LpOutcome::Infeasible;
    }
    tableau.phase_two(objective)
}

/// Whether `{x >= 0 : constraints}` is nonempty (phase one only).
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    Tableau::build(num_vars, constraints).phase_one()
}

struct Tableau {
    num_vars: usize,
    /// First artificial column; columns at or beyond it never re-enter in phase two.
    art_start: usize,
    ncols: usize,
    /// Each row holds `ncols` coefficients followed by the right-hand side.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Reduced costs followed by minus the current objective value.
    costs: Vec<Rational>,
}

impl Tableau {
    fn build(num_vars: usize, constraints: &[Constraint]) -> Self {
        let mut normalized = Vec::with_capacity(constraints.len());
        for c in constraints {
            assert_eq!(
                c.coeffs.len(),
                num_vars,
                "constraint width must equal the variable count"
            );
            if c.rhs.is_negative() {
                let relation = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                normalized.push(Constraint {
                    coeffs: c.coeffs.iter().map(|a| -a).collect(),
                    relation,
                    rhs: -&c.rhs,
                });
            } else {
                normalized.push(c.clone());
            }
        }

        let slacks = normalized
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let artificials = normalized
            .iter()
            .filter(|c| c.relation != Relation::Le)
            .count();
        let art_start = num_vars + slacks;
        let ncols = art_start + artificials;

        let mut rows = Vec::with_capacity(normalized.len());
        let mut basis = Vec::with_capacity(normalized.len());
        let (mut next_slack, mut next_art) = (num_vars, art_start);
        for c in normalized {
            let mut row = vec![Rational::zero(); ncols + 1];
            for (slot, a) in row.iter_mut().zip(c.coeffs) {
                *slot = a;
            }
            match c.relation {
                Relation::Le => {
                    row[next_slack] = Rational::from_integer(1.into());
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = Rational::from_integer((-1).into());
                    next_slack += 1;
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = Rational::from_integer(1.into());
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            row[ncols] = c.rhs;
            rows.push(row);
        }

        Tableau {
            num_vars,
            art_start,
            ncols,
            rows,
            basis,
            costs: vec![Rational::zero(); ncols + 1],
        }
    }

    /// Sets `costs` to the reduced costs of `c` (indexed by column) for the current basis.
    fn price(&mut self, c: impl Fn(usize) -> Rational) {
        let mut costs: Vec<Rational> = (0..self.ncols).map(&c).collect();
        costs.push(Rational::zero());
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = c(b);
            if cb.is_zero() {
                continue;
            }
            for (slot, a) in costs.iter_mut().zip(row) {
                if !a.is_zero() {
                    *slot -= &cb * a;
                }
            }
        }
        self.costs = costs;
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let p = self.rows[r][j].clone();
        for a in self.rows[r].iter_mut() {
            if !a.is_zero() {
                *a /= &p;
            }
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[j].is_zero() {
                continue;
            }
            let f = row[j].clone();
            for (slot, a) in row.iter_mut().zip(&pivot_row) {
                if !a.is_zero() {
                    *slot -= &f * a;
                }
            }
        }
        if !self.costs[j].is_zero() {
            let f = self.costs[j].clone();
            for (slot, a) in self.costs.iter_mut().zip(&pivot_row) {
                if !a.is_zero() {
                    *slot -= &f * a;
                }
            }
        }
        self.basis[r] = j;
    }

    /// Runs Bland's rule over columns `< limit`; returns false when unbounded.
    fn optimize(&mut self, limit: usize) -> bool {
        loop {
            let entering = (0..limit).find(|&j| self.costs[j].is_negative());
            let Some(j) = entering else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[j].is_positive() {
                    continue;
                }
                let ratio = &row[self.ncols] / &row[j];
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, j),
            }
        }
    }

    fn phase_one(&mut self) -> bool {
        let art_start = self.art_start;
        self.price(|j| {
            if j >= art_start {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        });
        let bounded = self.optimize(self.ncols);
        debug_assert!(bounded, "phase one objective is bounded below by zero");
        if !self.costs[self.ncols].is_zero() {
            return false;
        }
        // Drive zero-level artificials out of the basis; drop rows that are redundant.
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.art_start {
                match (0..self.art_start).find(|&j| !self.rows[r][j].is_zero()) {
                    Some(j) => self.pivot(r, j),
                    None => {
                        self.rows.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        true
    }

    fn phase_two(mut self, objective: &[Rational]) -> LpOutcome {
        let n = self.num_vars;
        self.price(|j| {
            if j < n {
                objective[j].clone()
            } else {
                Rational::zero()
            }
        });
        if !self.optimize(self.art_start) {
            return LpOutcome::Unbounded;
        }
        let mut point = vec![Rational::zero(); n];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < n {
                point[b] = row[self.ncols].clone();
            }
        }
        LpOutcome::Optimal {
            value: -self.costs[self.ncols].clone(),
            point,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&a| q(a, 1)).collect()
    }

    #[test]
    fn textbook_minimum() {
        // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6
        let cons = vec![
            Constraint::new(qs(&[1, 2]), Relation::Le, q(4, 1)),
            Constraint::new(qs(&[3, 1]), Relation::Le, q(6, 1)),
        ];
        match minimize(2, &qs(&[-1, -1]), &cons) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(-14, 5));
                assert_eq!(point, vec![q(8, 5), q(6, 5)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_rows() {
        // min x + y  s.t.  x + y >= 1/2,  x - y = 1/4
        let cons = vec![
            Constraint::new(qs(&[1, 1]), Relation::Ge, q(1, 2)),
            Constraint::new(qs(&[1, -1]), Relation::Eq, q(1, 4)),
        ];
        match minimize(2, &qs(&[1, 1]), &cons) {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, q(1, 2));
                assert_eq!(point, vec![q(3, 8), q(1, 8)]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let cons = vec![
            Constraint::new(qs(&[1]), Relation::Le, q(1, 1)),
            Constraint::new(qs(&[1]), Relation::Ge, q(2, 1)),
        ];
        assert_eq!(minimize(1, &qs(&[1]), &cons), LpOutcome::Infeasible);
        assert!(!feasible(1, &cons));
        let cons = vec![Constraint::new(qs(&[1, -1]), Relation::Le, q(1, 1))];
        assert_eq!(minimize(2, &qs(&[0, -1]), &cons), LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_rows_are_flipped() {
        // -x <= -3  means x >= 3
        let cons = vec![Constraint::new(qs(&[-1]), Relation::Le, q(-3, 1))];
        match minimize(1, &qs(&[1]), &cons) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(3, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let cons = vec![
            Constraint::new(qs(&[1, 1]), Relation::Eq, q(1, 1)),
            Constraint::new(qs(&[2, 2]), Relation::Eq, q(2, 1)),
        ];
        match minimize(2, &qs(&[1, 2]), &cons) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(1, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale's cycling example, which loops under the largest-coefficient rule.
        let cons = vec![
            Constraint::new(
                vec![q(1, 4), q(-8, 1), q(-1, 1), q(9, 1)],
                Relation::Le,
                q(0, 1),
            ),
            Constraint::new(
                vec![q(1, 2), q(-12, 1), q(-1, 2), q(3, 1)],
                Relation::Le,
                q(0, 1),
            ),
            Constraint::new(qs(&[0, 0, 1, 0]), Relation::Le, q(1, 1)),
        ];
        let obj = vec![q(-3, 4), q(20, 1), q(-1, 2), q(6, 1)];
        match minimize(4, &obj, &cons) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(-5, 4)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
