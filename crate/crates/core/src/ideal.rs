//! Monomial ideals in `k[x_1, ..., x_r]`, stored as antichains of exponent vectors.
//!
//! Every constructor minimizes, so two ideals are equal exactly when their
//! generator lists are equal. The zero ideal has no generators and the unit
//! ideal is generated by the zero vector.

use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x^b = x_1^{b_1} ... x_r^{b_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zeros(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    /// The exponent vector of the variable `x_i`.
    pub fn unit(arity: usize, i: usize) -> Self {
        let mut v = vec![0; arity];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Indices of the variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        check_arity(self.arity(), other.arity())?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (the lcm of the two monomials).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise `max(self - other, 0)`: the monomial `x^self / gcd(x^self, x^other)`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Writes the monomial as `x^2*y`, or `1` for the zero vector.
    pub fn format_with(&self, names: &[String]) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;

    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::ArityMismatch { expected, found })
    }
}

/// Default variable names: `x, y, z` up to three variables, `x1, ..., xr` beyond.
pub fn default_names(arity: usize) -> Vec<String> {
    if arity <= 3 {
        ["x", "y", "z"][..arity]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<ExponentVector>,
}

/// Size of `J/I` counted in monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientCount {
    Finite(u64),
    Infinite,
}

impl MonomialIdeal {
    /// Reduces `gens` to its divisibility-minimal elements, sorted lexicographically.
    pub fn minimize(gens: impl IntoIterator<Item = ExponentVector>, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let mut all: Vec<ExponentVector> = gens.into_iter().collect();
        for g in &all {
            check_arity(arity, g.arity())?;
        }
        all.sort_unstable();
        all.dedup();
        all.sort_by_key(|g| g.degree());
        let mut kept: Vec<ExponentVector> = Vec::with_capacity(all.len());
        for g in all {
            // Candidates arrive by degree, so only earlier ones can divide g.
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort_unstable();
        Ok(MonomialIdeal { arity, gens: kept })
    }

    pub fn from_exponents(arity: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::minimize(gens.iter().map(|g| ExponentVector::new(g.to_vec())), arity)
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: vec![ExponentVector::zeros(arity)],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_r)`.
    pub fn maximal(arity: usize) -> Self {
        let gens = (0..arity).map(|i| ExponentVector::unit(arity, i));
        Self::minimize(gens, arity).expect("unit vectors share the arity")
    }

    /// `(x_{i_1}^{e_1}, ...)` from a list of `(variable, exponent)` pairs.
    pub fn pure_powers(arity: usize, powers: &[(usize, u32)]) -> Result<Self> {
        let gens = powers.iter().map(|&(i, e)| {
            let mut v = vec![0; arity];
            v[i] = e;
            ExponentVector(v)
        });
        Self::minimize(gens, arity)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// Componentwise maximum exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.arity];
        for g in &self.gens {
            for (slot, &e) in m.iter_mut().zip(g.as_slice()) {
                *slot = (*slot).max(e);
            }
        }
        m
    }

    pub fn member(&self, m: &ExponentVector) -> Result<bool> {
        check_arity(self.arity, m.arity())?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_arity(self.arity, other.arity)?;
        Ok(other
            .gens
            .iter()
            .all(|g| self.gens.iter().any(|h| h.divides(g))))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_arity(self.arity, other.arity)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                prods.push(g.checked_add(h)?);
            }
        }
        Self::minimize(prods, self.arity)
    }

    /// `I^n` by repeated multiplication, minimizing after every product.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.arity);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_arity(self.arity, other.arity)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        Self::minimize(lcms, self.arity)
    }

    /// Intersection of a nonempty family; `None` for an empty iterator.
    pub fn intersect_all<'a>(
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<Option<MonomialIdeal>> {
        let mut acc: Option<MonomialIdeal> = None;
        for ideal in ideals {
            acc = Some(match acc {
                None => ideal.clone(),
                Some(a) => a.intersect(ideal)?,
            });
        }
        Ok(acc)
    }

    /// Sum `I + J`.
    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_arity(self.arity, other.arity)?;
        Self::minimize(self.gens.iter().chain(&other.gens).cloned(), self.arity)
    }

    /// The colon ideal `(I : x^m)`.
    pub fn colon_monomial(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        check_arity(self.arity, m.arity())?;
        Self::minimize(self.gens.iter().map(|g| g.saturating_sub(m)), self.arity)
    }

    /// `(I : x_i^∞)` together with the number of colon steps taken to stabilize.
    pub fn saturate_variable(&self, i: usize) -> Result<(MonomialIdeal, u32)> {
        if i >= self.arity {
            return Err(Error::InvalidArgument(format!(
                "variable index {i} out of range for arity {}",
                self.arity
            )));
        }
        let step = ExponentVector::unit(self.arity, i);
        let mut current = self.clone();
        let mut steps = 0;
        loop {
            let next = current.colon_monomial(&step)?;
            if next == current {
                return Ok((current, steps));
            }
            current = next;
            steps += 1;
        }
    }

    /// `(I : m^∞)` with `m = (x_1, ..., x_r)`.
    pub fn saturate_maximal(&self) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(self.arity);
        for i in 0..self.arity {
            parts.push(self.saturate_variable(i)?.0);
        }
        Ok(MonomialIdeal::intersect_all(&parts)?.expect("arity is positive"))
    }

    /// Writes the ideal in the `(m1, m2, ...)` input grammar.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.format_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names(self.arity)))
    }
}

fn require_containment(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<()> {
    if j.contains_ideal(i)? {
        Ok(())
    } else {
        Err(Error::NotContained(format!("{i} is not contained in {j}")))
    }
}

/// Minimal number of generators of `J/I` for monomial ideals `I ⊆ J`.
///
/// A minimal generator of `J` survives in `J/(I + mJ)` exactly when it is not in `I`.
pub fn mu_quotient(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<usize> {
    require_containment(j, i)?;
    let mut count = 0;
    for g in j.generators() {
        if !i.member(g)? {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of monomials of `J` outside `I`, for `I ⊆ J`.
///
/// The count is finite iff `J ⊆ (I : m^∞)`. In that case every monomial of
/// `J` missing from `I` has `b_k < max_g g_k` for every variable, since
/// raising a coordinate at or beyond the largest generator exponent never
/// changes membership in `I`.
pub fn count_quotient_monomials(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<QuotientCount> {
    require_containment(j, i)?;
    if j.is_zero() {
        return Ok(QuotientCount::Finite(0));
    }
    if !i.saturate_maximal()?.contains_ideal(j)? {
        return Ok(QuotientCount::Infinite);
    }
    let bounds = i.max_exponents();
    if bounds.contains(&0) {
        return Ok(QuotientCount::Finite(0));
    }
    let mut count = 0u64;
    for_each_in_box(&bounds.iter().map(|b| b - 1).collect::<Vec<_>>(), |p| {
        let m = ExponentVector::new(p.to_vec());
        if j.gens.iter().any(|g| g.divides(&m)) && !i.gens.iter().any(|g| g.divides(&m)) {
            count += 1;
        }
    });
    Ok(QuotientCount::Finite(count))
}

/// Visits every integer point of `[0, upper_0] x ... x [0, upper_{r-1}]` in lexicographic order.
pub fn for_each_in_box(upper: &[u32], mut f: impl FnMut(&[u32])) {
    let r = upper.len();
    let mut p = vec![0u32; r];
    loop {
        f(&p);
        let mut k = r;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if p[k] < upper[k] {
                p[k] += 1;
                for slot in p.iter_mut().skip(k + 1) {
                    *slot = 0;
                }
                break;
            }
        }
    }
}
