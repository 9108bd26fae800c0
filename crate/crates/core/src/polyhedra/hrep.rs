//! V- to H-representation by Fourier–Motzkin elimination.
//!
//! Starting from `u >= Σ λ_g g` with `λ >= 0` and `Σ λ = 1`, the last
//! multiplier is substituted away through the equality and the remaining ones
//! are eliminated one at a time, pruning redundant rows by LP after each step.

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::lp::{self, Constraint, LpOutcome, Rational, Relation};
use super::{is_zero_row, v_member, RationalPoint, VPolyhedron};
use crate::error::{Error, Result};
use crate::ideal::check_arity;

/// `coeffs · u >= rhs`, with integer coefficients of gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HRow {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
}

impl HRow {
    pub fn new(coeffs: Vec<i64>, rhs: i64) -> Self {
        HRow { coeffs, rhs }
    }
}

/// Inequality system `rows` together with the implicit `u >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPolyhedron {
    arity: usize,
    rows: Vec<HRow>,
}

impl HPolyhedron {
    /// Normalizes, deduplicates, prunes redundant rows and sorts.
    pub fn from_rows(arity: usize, rows: Vec<HRow>) -> Result<Self> {
        let mut rational = Vec::with_capacity(rows.len());
        for r in rows {
            check_arity(arity, r.coeffs.len())?;
            rational.push(RationalRow {
                coeffs: r
                    .coeffs
                    .iter()
                    .map(|&c| Rational::from_integer(c.into()))
                    .collect(),
                rhs: Rational::from_integer(r.rhs.into()),
            });
        }
        finish(arity, rational)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rows(&self) -> &[HRow] {
        &self.rows
    }

    /// `q ∈ scale · P`: every row holds with right-hand side scaled, and `q >= 0`.
    pub fn contains(&self, q: &RationalPoint, scale: u32) -> Result<bool> {
        check_arity(self.arity, q.arity())?;
        if q.coords().iter().any(|c| c.is_negative()) {
            return Ok(false);
        }
        Ok(self.rows.iter().all(|row| {
            let lhs: Rational = row
                .coeffs
                .iter()
                .zip(q.coords())
                .map(|(&a, x)| Rational::from_integer(a.into()) * x)
                .sum();
            lhs >= Rational::from_integer(BigInt::from(row.rhs) * BigInt::from(scale))
        }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct RationalRow {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl RationalRow {
    /// Positive rescaling so that the first nonzero coefficient has absolute value 1.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }

    fn to_constraint(&self) -> Constraint {
        Constraint::new(self.coeffs.clone(), Relation::Ge, self.rhs.clone())
    }
}

/// True when `rows[k]` is implied by the other rows together with `x >= 0`.
fn implied_by_others(rows: &[RationalRow], k: usize) -> bool {
    let width = rows[k].coeffs.len();
    let others: Vec<Constraint> = rows
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, r)| r.to_constraint())
        .collect();
    match lp::minimize(width, &rows[k].coeffs, &others) {
        LpOutcome::Optimal { value, .. } => value >= rows[k].rhs,
        LpOutcome::Unbounded => false,
        // An empty remainder implies everything; it never arises for nonempty polyhedra.
        LpOutcome::Infeasible => true,
    }
}

fn prune(mut rows: Vec<RationalRow>) -> Vec<RationalRow> {
    rows = rows.into_iter().map(RationalRow::normalized).collect();
    rows.retain(|r| !is_zero_row(&r.coeffs));
    rows.sort_by(|a, b| (&a.coeffs, &a.rhs).cmp(&(&b.coeffs, &b.rhs)));
    rows.dedup();
    let mut k = 0;
    while k < rows.len() {
        if implied_by_others(&rows, k) {
            rows.remove(k);
        } else {
            k += 1;
        }
    }
    rows
}

/// Clears denominators, divides by the coefficient gcd and prunes.
fn finish(arity: usize, rows: Vec<RationalRow>) -> Result<HPolyhedron> {
    let rows = prune(rows);
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let denom = r
            .coeffs
            .iter()
            .chain(std::iter::once(&r.rhs))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = r.coeffs.iter().map(|c| (c * &denom).to_integer()).collect();
        let rhs = &r.rhs * Rational::from_integer(denom);
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let rhs = rhs / Rational::from_integer(g.clone());
        if !rhs.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "facet right-hand side {rhs} is not integral after normalization"
            )));
        }
        let to_i64 = |b: &BigInt| {
            b.to_i64()
                .ok_or_else(|| Error::InvalidArgument("inequality coefficient exceeds i64".into()))
        };
        let coeffs = ints
            .iter()
            .map(|c| to_i64(&(c / &g)))
            .collect::<Result<Vec<_>>>()?;
        out.push(HRow {
            coeffs,
            rhs: to_i64(&rhs.to_integer())?,
        });
    }
    out.sort();
    Ok(HPolyhedron { arity, rows: out })
}

/// Irredundant H-representation of `conv(points) + R^r_{>=0}`.
pub fn hrep(p: &VPolyhedron) -> Result<HPolyhedron> {
    let r = p.arity();
    // Generators inside the hull of the others contribute no vertex.
    let mut points = p.points().to_vec();
    let mut k = 0;
    while k < points.len() && points.len() > 1 {
        let rest: Vec<_> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let rest = VPolyhedron::new(r, rest)?;
        if v_member(&rest, &RationalPoint::from(&points[k]), 1)? {
            points.remove(k);
        } else {
            k += 1;
        }
    }

    let int = |v: u32| Rational::from_integer(BigInt::from(v));
    let (last, free) = points.split_last().expect("at least one point");
    let m = free.len();
    let width = r + m;
    let mut rows = Vec::with_capacity(r + 1);
    // u_i + Σ_g λ_g (h_i - g_i) >= h_i, where h is the substituted point
    for i in 0..r {
        let mut coeffs = vec![Rational::zero(); width];
        coeffs[i] = Rational::one();
        for (g_idx, g) in free.iter().enumerate() {
            coeffs[r + g_idx] = int(last[i]) - int(g[i]);
        }
        rows.push(RationalRow {
            coeffs,
            rhs: int(last[i]),
        });
    }
    if m > 0 {
        let mut coeffs = vec![Rational::zero(); width];
        for c in coeffs.iter_mut().skip(r) {
            *c = -Rational::one();
        }
        rows.push(RationalRow {
            coeffs,
            rhs: -Rational::one(),
        });
    }

    for col in (r..width).rev() {
        rows = eliminate(rows, col);
        rows = prune(rows);
    }
    let rows = rows
        .into_iter()
        .map(|mut row| {
            row.coeffs.truncate(r);
            row
        })
        .collect();
    finish(r, rows)
}

/// Eliminates column `col`, whose variable is nonnegative, and drops it from every row.
fn eliminate(rows: Vec<RationalRow>, col: usize) -> Vec<RationalRow> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    // Pruning discards the sign row of the variable, so it is restored here.
    let width = rows.first().map_or(0, |r| r.coeffs.len());
    let mut sign = vec![Rational::zero(); width];
    sign[col] = Rational::one();
    pos.push(RationalRow {
        coeffs: sign,
        rhs: Rational::zero(),
    });
    for row in rows {
        if row.coeffs[col].is_positive() {
            pos.push(row);
        } else if row.coeffs[col].is_negative() {
            neg.push(row);
        } else {
            out.push(row);
        }
    }
    for p in &pos {
        for n in &neg {
            let (fp, fn_) = (-&n.coeffs[col], p.coeffs[col].clone());
            let coeffs = p
                .coeffs
                .iter()
                .zip(&n.coeffs)
                .map(|(a, b)| a * &fp + b * &fn_)
                .collect();
            out.push(RationalRow {
                coeffs,
                rhs: &p.rhs * &fp + &n.rhs * &fn_,
            });
        }
    }
    for row in out.iter_mut() {
        row.coeffs.remove(col);
    }
    out
}
