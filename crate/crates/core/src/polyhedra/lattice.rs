//! Minimal lattice points of scaled polyhedra, integral closure and `isdef`.
//!
//! Every polyhedron here is closed upward, so the lattice points over a fixed
//! prefix `(b_1, …, b_{r-1})` form a ray starting at the ceiling of the
//! column minimum. A point is minimal exactly when each lowered prefix has a
//! strictly larger column start, which turns the search into one LP per
//! prefix instead of one per box point.

use num::ToPrimitive;

use super::{np_of, sp_of, v_member, RationalPoint, VPolyhedron};
use crate::error::{Error, Result};
use crate::ideal::{check_arity, for_each_in_box, ExponentVector, MonomialIdeal};

/// Minimal lattice points of `scale · ∩ factors` inside the box `[0, upper]`.
///
/// When `upper` dominates `scale` times the maximal generator coordinates of
/// every factor, these are all the minimal lattice points. Output is sorted
/// lexicographically.
pub fn minimal_lattice_points(
    factors: &[VPolyhedron],
    scale: u32,
    upper: &[u32],
) -> Result<Vec<ExponentVector>> {
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidArgument("at least one polyhedron is required".into()))?;
    let r = first.arity();
    for f in factors {
        check_arity(r, f.arity())?;
    }
    check_arity(r, upper.len())?;
    if scale == 0 {
        return Err(Error::ZeroPower);
    }
    let (prefix_upper, last_upper) = upper.split_at(r - 1);
    let last_upper = last_upper[0] as u64;

    // Column starts over the prefix box, flattened in mixed radix; None means empty.
    let radix: Vec<usize> = prefix_upper.iter().map(|&u| u as usize + 1).collect();
    let mut starts: Vec<Option<u64>> = Vec::with_capacity(radix.iter().product());
    for_each_in_box(prefix_upper, |prefix| {
        let mut start = Some(0u64);
        for f in factors {
            let Some(s) = start else { break };
            start = f.column_minimum(prefix, scale).map(|m| {
                let c = m
                    .ceil()
                    .to_integer()
                    .to_u64()
                    .expect("column start is nonnegative");
                s.max(c)
            });
        }
        starts.push(start);
    });

    let index = |p: &[u32]| {
        p.iter()
            .zip(&radix)
            .fold(0usize, |acc, (&x, &k)| acc * k + x as usize)
    };
    let mut out = Vec::new();
    for_each_in_box(prefix_upper, |prefix| {
        let Some(t) = starts[index(prefix)] else {
            return;
        };
        if t > last_upper {
            return;
        }
        let mut lowered = prefix.to_vec();
        for i in 0..prefix.len() {
            if prefix[i] == 0 {
                continue;
            }
            lowered[i] -= 1;
            let below = starts[index(&lowered)];
            lowered[i] += 1;
            if below.is_some_and(|s| s <= t) {
                return;
            }
        }
        let mut b = prefix.to_vec();
        b.push(t as u32);
        out.push(ExponentVector::new(b));
    });
    out.sort();
    Ok(out)
}

/// Monomial integral closure: the lattice points of `NP(J)`.
pub fn integral_closure(j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if j.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if j.is_unit() {
        return Ok(j.clone());
    }
    let points = minimal_lattice_points(&[np_of(j)?], 1, &j.max_exponents())?;
    MonomialIdeal::minimize(points, j.arity())
}

/// Minimal lattice points of `n · SP(I)`. They generate an ideal containing
/// `closure(I^(n))`; the two agree for large enough multiples of `n` but can
/// differ at a fixed `n`, e.g. `x^8 y z` for `(x^4, y) ∩ (x^3, z^2)` at `n = 3`.
pub fn minimal_lattice_points_sp(ideal: &MonomialIdeal, n: u32) -> Result<Vec<ExponentVector>> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let sp = sp_of(ideal)?;
    let upper = sp
        .max_coordinates()
        .iter()
        .map(|&d| d.checked_mul(n).ok_or(Error::ExponentOverflow))
        .collect::<Result<Vec<_>>>()?;
    minimal_lattice_points(sp.factors(), n, &upper)
}

/// Minimal lattice points of `n · SP(I)` outside `n · NP(I)`. This is
/// `μ(closure(I^(n)) / closure(I^n))` whenever the lattice points of `n · SP(I)`
/// are exactly `closure(I^(n))`, as for the three-cycle family.
pub fn isdef(ideal: &MonomialIdeal, n: u32) -> Result<usize> {
    let np = np_of(ideal)?;
    let mut count = 0;
    for b in minimal_lattice_points_sp(ideal, n)? {
        if !v_member(&np, &RationalPoint::from(&b), n)? {
            count += 1;
        }
    }
    Ok(count)
}
