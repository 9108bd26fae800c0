//! Exact fitting of eventual quasi-polynomials to integer sequences.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::polyhedra::lp::Rational;

/// `f(n) = branches[n mod period](n)` for `n >= onset`. Each branch lists
/// coefficients of `n^0, n^1, …` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    onset: u64,
    branches: Vec<Vec<Rational>>,
}

impl QuasiPolynomial {
    pub fn new(period: u64, onset: u64, branches: Vec<Vec<Rational>>) -> Result<Self> {
        if period == 0 || branches.len() as u64 != period {
            return Err(Error::InvalidArgument(format!(
                "expected {period} branches for period {period}, got {}",
                branches.len()
            )));
        }
        Ok(QuasiPolynomial {
            period,
            onset,
            branches: branches.into_iter().map(trim).collect(),
        })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn onset(&self) -> u64 {
        self.onset
    }

    /// Branch `i` serves `n ≡ i (mod period)`.
    pub fn branches(&self) -> &[Vec<Rational>] {
        &self.branches
    }

    pub fn evaluate(&self, n: u64) -> Result<Rational> {
        if n < self.onset {
            return Err(Error::InvalidArgument(format!(
                "n = {n} is below the onset {}",
                self.onset
            )));
        }
        Ok(horner(&self.branches[(n % self.period) as usize], n))
    }

    /// Largest branch degree; the zero function has degree 0.
    pub fn degree(&self) -> usize {
        self.branches
            .iter()
            .map(|b| b.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `n^degree` in every branch, zero where a branch is shorter.
    pub fn leading_coefficients(&self) -> Vec<Rational> {
        let d = self.degree();
        self.branches
            .iter()
            .map(|b| b.get(d).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }
}

/// A fit together with its certification status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fit {
    pub quasi: QuasiPolynomial,
    /// The verified tail has fewer than `2 p (max_degree + 1)` points, so the
    /// fit is only as good as the sampled window.
    pub window_limited: bool,
}

fn trim(mut c: Vec<Rational>) -> Vec<Rational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn horner(coeffs: &[Rational], n: u64) -> Rational {
    let x = Rational::from_integer(n.into());
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * &x + c)
}

/// `(n - shift) / step`, then multiplied into `poly` (coefficients in `n`).
fn mul_linear(poly: &[Rational], shift: &Rational, step: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); poly.len() + 1];
    for (k, c) in poly.iter().enumerate() {
        out[k + 1] += c / step;
        out[k] -= c * shift / step;
    }
    out
}

/// Newton forward interpolation through `(start + k·step, ys[k])`, `k = 0..ys.len()`.
fn interpolate(start: u64, step: u64, ys: &[Rational]) -> Vec<Rational> {
    let mut diffs = ys.to_vec();
    let mut heads = Vec::with_capacity(ys.len());
    for _ in 0..ys.len() {
        heads.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let step_r = Rational::from_integer(step.into());
    let mut result = vec![Rational::zero()];
    // basis_j = C((n - start)/step, j)
    let mut basis = vec![Rational::one()];
    for (j, h) in heads.iter().enumerate() {
        if result.len() < basis.len() {
            result.resize(basis.len(), Rational::zero());
        }
        for (r, b) in result.iter_mut().zip(&basis) {
            *r += h * b;
        }
        let shift = Rational::from_integer((start + j as u64 * step).into());
        let mut next = mul_linear(&basis, &shift, &step_r);
        let denom = Rational::from_integer((j as u64 + 1).into());
        for c in next.iter_mut() {
            *c /= &denom;
        }
        basis = next;
    }
    trim(result)
}

/// Smallest-degree polynomial through every point of `class`, verified by at
/// least one point beyond those used to interpolate.
fn fit_class(class: &[(u64, Rational)], step: u64, max_degree: usize) -> Option<Vec<Rational>> {
    let first = class.first()?.0;
    (0..=max_degree)
        .take_while(|d| class.len() >= d + 2)
        .find_map(|d| {
            let ys: Vec<Rational> = class[..=d].iter().map(|(_, y)| y.clone()).collect();
            let poly = interpolate(first, step, &ys);
            class
                .iter()
                .all(|(n, y)| horner(&poly, *n) == *y)
                .then_some(poly)
        })
}

/// Tries a single `(period, onset)` over the window `1..=values.len()`.
fn try_fit(
    values: &[Rational],
    period: u64,
    onset: u64,
    max_degree: usize,
) -> Option<Vec<Vec<Rational>>> {
    let last = values.len() as u64;
    let mut branches = vec![Vec::new(); period as usize];
    for first in onset..onset + period {
        let class: Vec<(u64, Rational)> = (first..=last)
            .step_by(period as usize)
            .map(|n| (n, values[n as usize - 1].clone()))
            .collect();
        branches[(first % period) as usize] = fit_class(&class, period, max_degree)?;
    }
    Some(branches)
}

/// Smallest period `p <= max_period`, then smallest onset, for which every
/// residue class of the tail is a polynomial of degree `<= max_degree`.
///
/// Fits whose tail has at least `2 p (max_degree + 1)` points are preferred.
/// Only when none exists are shorter, window-limited tails considered, and
/// then ordered by onset first so that a few coincidentally aligned points at
/// the end of the window cannot win.
/// `values` must be keyed on `1..=N` without gaps.
pub fn fit(values: &BTreeMap<u64, i64>, max_period: u64, max_degree: usize) -> Result<Fit> {
    if values.is_empty() {
        return Err(Error::InvalidArgument("no data points".into()));
    }
    for (expected, &n) in (1u64..).zip(values.keys()) {
        if n != expected {
            return Err(Error::InvalidArgument(format!(
                "values must cover 1..=N without gaps; found {n} where {expected} was expected"
            )));
        }
    }
    if max_period == 0 {
        return Err(Error::InvalidArgument("max_period must be positive".into()));
    }
    let ys: Vec<Rational> = values
        .values()
        .map(|&v| Rational::from_integer(v.into()))
        .collect();
    let last = ys.len() as u64;
    let certified = |period: u64| 2 * period * (max_degree as u64 + 1);
    for period in 1..=max_period {
        for onset in (1..=last).take_while(|&o| last - o + 1 >= certified(period)) {
            if let Some(branches) = try_fit(&ys, period, onset, max_degree) {
                return Ok(Fit {
                    quasi: QuasiPolynomial::new(period, onset, branches)?,
                    window_limited: false,
                });
            }
        }
    }
    // Short tails: the longest verified tail wins, then the smallest period.
    for onset in 1..=last {
        for period in 1..=max_period {
            if let Some(branches) = try_fit(&ys, period, onset, max_degree) {
                let window_limited = last - onset + 1 < certified(period);
                return Ok(Fit {
                    quasi: QuasiPolynomial::new(period, onset, branches)?,
                    window_limited,
                });
            }
        }
    }
    Err(Error::NoFit {
        max_period,
        max_degree,
    })
}
