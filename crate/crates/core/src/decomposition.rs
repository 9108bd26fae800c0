//! Irreducible and primary decompositions of monomial ideals.
//!
//! Irreducible components come from the splitting rule
//! `I = (I + x_i^e) ∩ (I + m / x_i^e)` applied to a generator `m` whose support
//! has at least two variables. Primary components are obtained by grouping
//! irreducible components with the same radical.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};

/// A set of variable indices, standing for the prime `(x_i : i in support)`.
pub type Support = BTreeSet<usize>;

/// `(x_i^{a_i} : i in map)`, an irreducible monomial ideal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    arity: usize,
    pure_powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(arity: usize, pure_powers: BTreeMap<usize, u32>) -> Result<Self> {
        for (&i, &e) in &pure_powers {
            if i >= arity || e == 0 {
                return Err(Error::InvalidArgument(format!(
                    "invalid pure power x_{i}^{e} in arity {arity}"
                )));
            }
        }
        Ok(IrreducibleComponent { arity, pure_powers })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, u32> {
        &self.pure_powers
    }

    pub fn support(&self) -> Support {
        self.pure_powers.keys().copied().collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        if self.pure_powers.is_empty() {
            return MonomialIdeal::unit(self.arity);
        }
        let powers: Vec<(usize, u32)> = self.pure_powers.iter().map(|(&i, &e)| (i, e)).collect();
        MonomialIdeal::pure_powers(self.arity, &powers).expect("indices checked at construction")
    }

    /// `self ⊆ other`: each generator `x_i^{a_i}` of `self` is divisible by
    /// the generator `x_i^{b_i}` of `other`.
    fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.pure_powers
            .iter()
            .all(|(i, a)| other.pure_powers.get(i).is_some_and(|b| b <= a))
    }
}

/// A primary component together with its radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub support: Support,
    pub ideal: MonomialIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    arity: usize,
    components: Vec<PrimaryComponent>,
    max_supports: Vec<Support>,
}

impl PrimaryDecomposition {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    /// Inclusion-maximal radical supports, in sorted order.
    pub fn max_supports(&self) -> &[Support] {
        &self.max_supports
    }

    pub fn associated_supports(&self) -> Vec<Support> {
        self.components.iter().map(|c| c.support.clone()).collect()
    }

    /// `Q_{⊆p}`: the intersection of the components whose radical lies in `p`.
    pub fn q_subset_p(&self, p: &Support) -> Result<MonomialIdeal> {
        if !self.max_supports.contains(p) {
            return Err(Error::NotMaximalSupport(p.iter().copied().collect()));
        }
        let below = self
            .components
            .iter()
            .filter(|c| c.support.is_subset(p))
            .map(|c| &c.ideal);
        Ok(MonomialIdeal::intersect_all(below)?.expect("p is itself a component support"))
    }

    pub fn has_embedded_primes(&self) -> bool {
        let supports = self.associated_supports();
        supports
            .iter()
            .any(|p| supports.iter().any(|q| q != p && q.is_subset(p)))
    }

    pub fn is_maximal_associated(&self) -> bool {
        self.components
            .iter()
            .any(|c| c.support.len() == self.arity)
    }
}

/// Irredundant irreducible decomposition of a proper nonzero monomial ideal.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.is_proper_nonzero()?;
    let mut found = BTreeSet::new();
    let mut visited = HashSet::new();
    split(ideal, &mut found, &mut visited)?;
    let candidates: Vec<IrreducibleComponent> = found.into_iter().collect();

    // Pairwise containment: a component containing another is redundant.
    let mut kept: Vec<IrreducibleComponent> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();

    // Leave-one-out check against the full intersection.
    let mut k = 0;
    while k < kept.len() {
        if kept.len() > 1 {
            let others: Vec<MonomialIdeal> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, c)| c.to_ideal())
                .collect();
            let rest = MonomialIdeal::intersect_all(&others)?.expect("at least one component");
            if kept[k].to_ideal().contains_ideal(&rest)? {
                kept.remove(k);
                continue;
            }
        }
        k += 1;
    }
    Ok(kept)
}

fn split(
    ideal: &MonomialIdeal,
    found: &mut BTreeSet<IrreducibleComponent>,
    visited: &mut HashSet<MonomialIdeal>,
) -> Result<()> {
    if !visited.insert(ideal.clone()) {
        return Ok(());
    }
    let arity = ideal.arity();
    let mixed = ideal.generators().iter().find(|g| g.support().len() >= 2);
    match mixed {
        None => {
            let powers = ideal
                .generators()
                .iter()
                .map(|g| {
                    let i = g.support()[0];
                    (i, g[i])
                })
                .collect();
            found.insert(IrreducibleComponent::new(arity, powers)?);
        }
        Some(g) => {
            let i = g.support()[0];
            let mut head = vec![0; arity];
            head[i] = g[i];
            let head = ExponentVector::new(head);
            let tail = g.saturating_sub(&head);
            let left = ideal.add(&MonomialIdeal::minimize([head], arity)?)?;
            let right = ideal.add(&MonomialIdeal::minimize([tail], arity)?)?;
            split(&left, found, visited)?;
            split(&right, found, visited)?;
        }
    }
    Ok(())
}

/// Supports of the associated primes, sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<Support>> {
    Ok(primary_decomposition(ideal)?.associated_supports())
}

fn cache() -> &'static Mutex<HashMap<MonomialIdeal, Arc<PrimaryDecomposition>>> {
    static CACHE: OnceLock<Mutex<HashMap<MonomialIdeal, Arc<PrimaryDecomposition>>>> =
        OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Primary decomposition, memoized on the canonical generator set.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Arc<PrimaryDecomposition>> {
    if let Some(hit) = cache()
        .lock()
        .expect("decomposition cache poisoned")
        .get(ideal)
    {
        return Ok(Arc::clone(hit));
    }
    let computed = Arc::new(compute_primary_decomposition(ideal)?);
    cache()
        .lock()
        .expect("decomposition cache poisoned")
        .insert(ideal.clone(), Arc::clone(&computed));
    Ok(computed)
}

fn compute_primary_decomposition(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    let arity = ideal.arity();
    let mut groups: BTreeMap<Support, MonomialIdeal> = BTreeMap::new();
    for comp in irreducible_decomposition(ideal)? {
        let q = comp.to_ideal();
        let merged = match groups.remove(&comp.support()) {
            Some(existing) => existing.intersect(&q)?,
            None => q,
        };
        groups.insert(comp.support(), merged);
    }
    let mut components: Vec<PrimaryComponent> = groups
        .into_iter()
        .map(|(support, ideal)| PrimaryComponent { support, ideal })
        .collect();

    let mut k = 0;
    while k < components.len() {
        if components.len() > 1 {
            let rest = MonomialIdeal::intersect_all(
                components
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, c)| &c.ideal),
            )?
            .expect("at least one component");
            if components[k].ideal.contains_ideal(&rest)? {
                components.remove(k);
                continue;
            }
        }
        k += 1;
    }

    let max_supports: Vec<Support> = components
        .iter()
        .map(|c| &c.support)
        .filter(|p| {
            !components
                .iter()
                .any(|c| c.support != **p && p.is_subset(&c.support))
        })
        .cloned()
        .collect();

    Ok(PrimaryDecomposition {
        arity,
        components,
        max_supports,
    })
}

pub fn has_embedded_primes(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(primary_decomposition(ideal)?.has_embedded_primes())
}

pub fn is_maximal_associated(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(primary_decomposition(ideal)?.is_maximal_associated())
}
