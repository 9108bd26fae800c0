//! Symbolic powers and the symbolic defect.
//!
//! `I^(n)` is the intersection of `(Q_{⊆p})^n` over the maximal associated
//! primes `p`, where `Q_{⊆p}` collects the primary components lying under `p`.

use std::collections::BTreeMap;

use crate::decomposition::primary_decomposition;
use crate::error::{Error, Result};
use crate::ideal::{check_arity, mu_quotient, ExponentVector, MonomialIdeal};

pub fn symbolic_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let decomposition = primary_decomposition(ideal)?;
    let mut acc: Option<MonomialIdeal> = None;
    for p in decomposition.max_supports() {
        let q = decomposition.q_subset_p(p)?.power(n)?;
        acc = Some(match acc {
            None => q,
            Some(a) => a.intersect(&q)?,
        });
    }
    Ok(acc.expect("a proper nonzero ideal has an associated prime"))
}

/// `(I^n : m^∞)`. Agrees with `I^(n)` when every associated prime of `I` has
/// height `r - 1`; kept as an independent cross-check of [`symbolic_power`].
pub fn saturated_power(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    ideal.is_proper_nonzero()?;
    ideal.power(n)?.saturate_maximal()
}

/// `sdef_I(n) = μ(I^(n) / I^n)`.
pub fn sdef(ideal: &MonomialIdeal, n: u32) -> Result<usize> {
    let sym = symbolic_power(ideal, n)?;
    let pow = ideal.power(n)?;
    mu_quotient(&sym, &pow)
}

/// `I = ∩ (x_i^{a_ij}, x_j^{a_ji})` over the recorded pairs `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Height2Family {
    arity: usize,
    pairs: BTreeMap<(usize, usize), (u32, u32)>,
}

impl Height2Family {
    /// `pairs` maps `(i, j)` with `i < j` to `(a_ij, a_ji)`.
    pub fn new(arity: usize, pairs: BTreeMap<(usize, usize), (u32, u32)>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        if pairs.is_empty() {
            return Err(Error::InvalidArgument(
                "height-2 family needs at least one pair".into(),
            ));
        }
        for (&(i, j), &(a, b)) in &pairs {
            if !(i < j && j < arity) || a == 0 || b == 0 {
                return Err(Error::InvalidArgument(format!(
                    "invalid component ({i},{j}) -> ({a},{b}) in arity {arity}"
                )));
            }
        }
        Ok(Height2Family { arity, pairs })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn pairs(&self) -> &BTreeMap<(usize, usize), (u32, u32)> {
        &self.pairs
    }

    pub fn components(&self) -> Vec<MonomialIdeal> {
        self.pairs
            .iter()
            .map(|(&(i, j), &(a, b))| {
                MonomialIdeal::pure_powers(self.arity, &[(i, a), (j, b)])
                    .expect("indices validated at construction")
            })
            .collect()
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        Ok(MonomialIdeal::intersect_all(&self.components())?.expect("nonempty family"))
    }

    /// The exponents `a_ij` of `x_i` over the recorded pairs containing `i`.
    fn exponents_at(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().filter_map(move |(&(p, q), &(a, b))| {
            if p == i {
                Some(a)
            } else if q == i {
                Some(b)
            } else {
                None
            }
        })
    }
}

/// Floor-condition membership of `x^b` in `I^(n)`:
/// `⌊b_i / a_ij⌋ + ⌊b_j / a_ji⌋ >= n` for every recorded pair.
pub fn height2_member(b: &ExponentVector, family: &Height2Family, n: u32) -> Result<bool> {
    check_arity(family.arity, b.arity())?;
    Ok(family
        .pairs
        .iter()
        .all(|(&(i, j), &(a, c))| (b[i] / a) as u64 + (b[j] / c) as u64 >= n as u64))
}

/// For each coordinate whose decrement leaves `I^(n)` (or that is already
/// zero), checks that `b_i ≡ 0 (mod a_ij)` for some recorded partner `j`.
///
/// Every minimal generator of `I^(n)` passes; the check is only meaningful
/// for members.
pub fn minimal_generator_mod_check(
    b: &ExponentVector,
    family: &Height2Family,
    n: u32,
) -> Result<bool> {
    check_arity(family.arity, b.arity())?;
    for i in 0..family.arity {
        let tight = if b[i] == 0 {
            true
        } else {
            let mut lowered = b.clone().into_vec();
            lowered[i] -= 1;
            !height2_member(&ExponentVector::new(lowered), family, n)?
        };
        if tight
            && family.exponents_at(i).next().is_some()
            && !family.exponents_at(i).any(|a| b[i].is_multiple_of(a))
        {
            return Ok(false);
        }
    }
    Ok(true)
}
