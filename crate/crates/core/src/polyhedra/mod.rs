//! Newton and symbolic polyhedra of monomial ideals.
//!
//! Every polyhedron here has the nonnegative orthant as its recession cone:
//! `NP(I) = conv(generators) + R^r_{>=0}`, and `SP(I)` is the intersection of
//! `NP(Q_{⊆p})` over the maximal associated primes. Membership is decided
//! exactly by linear programming over the convex-combination multipliers.

mod hrep;
mod lattice;
pub mod lp;

use num::{BigInt, Signed, Zero};

use crate::decomposition::primary_decomposition;
use crate::error::{Error, Result};
use crate::ideal::{check_arity, ExponentVector, MonomialIdeal};
use lp::{Constraint, LpOutcome, Rational, Relation};

pub use hrep::{hrep, HPolyhedron, HRow};
pub use lattice::{integral_closure, isdef, minimal_lattice_points, minimal_lattice_points_sp};

/// A point of `Q^r`; coordinates stay in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn from_ratios(parts: &[(i64, i64)]) -> Self {
        RationalPoint(
            parts
                .iter()
                .map(|&(n, d)| Rational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

impl From<&ExponentVector> for RationalPoint {
    fn from(v: &ExponentVector) -> Self {
        RationalPoint(
            v.as_slice()
                .iter()
                .map(|&e| Rational::from_integer(e.into()))
                .collect(),
        )
    }
}

/// `conv(points) + R^r_{>=0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolyhedron {
    arity: usize,
    points: Vec<ExponentVector>,
}

impl VPolyhedron {
    pub fn new(arity: usize, points: Vec<ExponentVector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidArgument(
                "a V-polyhedron needs at least one point".into(),
            ));
        }
        for p in &points {
            check_arity(arity, p.arity())?;
        }
        Ok(VPolyhedron { arity, points })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    /// Componentwise maximum over the generating points.
    pub fn max_coordinates(&self) -> Vec<u32> {
        let mut m = vec![0; self.arity];
        for p in &self.points {
            for (slot, &e) in m.iter_mut().zip(p.as_slice()) {
                *slot = (*slot).max(e);
            }
        }
        m
    }

    /// `q ∈ scale · self`.
    pub fn contains(&self, q: &RationalPoint, scale: u32) -> Result<bool> {
        v_member(self, q, scale)
    }

    /// Smallest `t` such that `(prefix, t) ∈ scale · self`, where `prefix`
    /// fixes the first `r - 1` coordinates; `None` when no such `t` exists.
    pub(crate) fn column_minimum(&self, prefix: &[u32], scale: u32) -> Option<Rational> {
        let last = self.arity - 1;
        let k = self.points.len();
        let scale = BigInt::from(scale);
        let coord =
            |g: &ExponentVector, i: usize| Rational::from_integer(BigInt::from(g[i]) * &scale);
        let mut cons = Vec::with_capacity(self.arity);
        cons.push(Constraint::new(vec![one(); k], Relation::Eq, one()));
        for (i, &bound) in prefix.iter().enumerate() {
            cons.push(Constraint::new(
                self.points.iter().map(|g| coord(g, i)).collect(),
                Relation::Le,
                Rational::from_integer(bound.into()),
            ));
        }
        let objective: Vec<Rational> = self.points.iter().map(|g| coord(g, last)).collect();
        match lp::minimize(k, &objective, &cons) {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded => unreachable!("objective is nonnegative on the simplex"),
        }
    }
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// Decides `q ∈ scale · P` by phase-one feasibility of
/// `λ >= 0, Σλ = 1, Σ λ_g (scale · g) <= q`.
pub fn v_member(p: &VPolyhedron, q: &RationalPoint, scale: u32) -> Result<bool> {
    check_arity(p.arity, q.arity())?;
    if q.coords().iter().any(|c| c.is_negative()) {
        return Ok(false);
    }
    let scale_int = BigInt::from(scale);
    let scaled =
        |g: &ExponentVector, i: usize| Rational::from_integer(BigInt::from(g[i]) * &scale_int);
    // A single generator below q settles membership without an LP.
    if p.points
        .iter()
        .any(|g| (0..p.arity).all(|i| scaled(g, i) <= q.coords()[i]))
    {
        return Ok(true);
    }
    let k = p.points.len();
    let mut cons = Vec::with_capacity(p.arity + 1);
    cons.push(Constraint::new(vec![one(); k], Relation::Eq, one()));
    for i in 0..p.arity {
        cons.push(Constraint::new(
            p.points.iter().map(|g| scaled(g, i)).collect(),
            Relation::Le,
            q.coords()[i].clone(),
        ));
    }
    Ok(lp::feasible(k, &cons))
}

/// `NP(I)`, generated by the minimal generators of `I`.
pub fn np_of(ideal: &MonomialIdeal) -> Result<VPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    VPolyhedron::new(ideal.arity(), ideal.generators().to_vec())
}

/// `SP(I) = ∩_p NP(Q_{⊆p})`, one factor per maximal associated prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPolyhedron {
    arity: usize,
    factors: Vec<VPolyhedron>,
}

impl SymbolicPolyhedron {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn factors(&self) -> &[VPolyhedron] {
        &self.factors
    }

    pub fn contains(&self, q: &RationalPoint, scale: u32) -> Result<bool> {
        sp_member(self, q, scale)
    }

    /// Componentwise maximum over the generating points of every factor.
    pub fn max_coordinates(&self) -> Vec<u32> {
        let mut m = vec![0; self.arity];
        for f in &self.factors {
            for (slot, e) in m.iter_mut().zip(f.max_coordinates()) {
                *slot = (*slot).max(e);
            }
        }
        m
    }

    /// Irredundant inequality description of the intersection of all factors.
    pub fn hrep(&self) -> Result<HPolyhedron> {
        let mut rows = Vec::new();
        for f in &self.factors {
            rows.extend(hrep(f)?.rows().iter().cloned());
        }
        HPolyhedron::from_rows(self.arity, rows)
    }
}

pub fn sp_of(ideal: &MonomialIdeal) -> Result<SymbolicPolyhedron> {
    let d = primary_decomposition(ideal)?;
    let factors = d
        .max_supports()
        .iter()
        .map(|p| np_of(&d.q_subset_p(p)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(SymbolicPolyhedron {
        arity: ideal.arity(),
        factors,
    })
}

pub fn sp_member(sp: &SymbolicPolyhedron, q: &RationalPoint, scale: u32) -> Result<bool> {
    check_arity(sp.arity, q.arity())?;
    for f in &sp.factors {
        if !v_member(f, q, scale)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn is_zero_row(coeffs: &[Rational]) -> bool {
    coeffs.iter().all(|c| c.is_zero())
}
