//! Closed forms for `I = (x^a, y) ∩ (y^b, z) ∩ (z^c, x) = (xyz, x^a z, x y^b, y z^c)`.
//!
//! Minimal generators of `I^(n)/I^n` either lie on one of the three faces
//! `u/a + v = n`, `v/b + w = n`, `w/c + u = n` of `n·SP(I)`, or equal the
//! rounded-up vertex `R_n = ⌈nP⌉`.

use std::collections::BTreeSet;

use num::{BigInt, Integer};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::polyhedra::lp::Rational;
use crate::polyhedra::{np_of, v_member, HRow, RationalPoint};
use crate::symbolic::{height2_member, sdef, Height2Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl FamilyParams {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidArgument(format!(
                "family parameters must be positive, got ({a}, {b}, {c})"
            )));
        }
        Ok(FamilyParams { a, b, c })
    }

    /// The three height-2 components, as a floor-condition family.
    pub fn components(&self) -> Height2Family {
        let pairs = [
            ((0, 1), (self.a, 1)),
            ((1, 2), (self.b, 1)),
            ((0, 2), (1, self.c)),
        ];
        Height2Family::new(3, pairs.into()).expect("parameters are positive")
    }
}

/// The vertex `P = (α, β, γ)` where the three rows of `SP(I)` meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexP {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl VertexP {
    pub fn sum(&self) -> Rational {
        &self.alpha + &self.beta + &self.gamma
    }
}

pub fn family_ideal(p: FamilyParams) -> MonomialIdeal {
    let FamilyParams { a, b, c } = p;
    MonomialIdeal::from_exponents(3, &[&[1, 1, 1], &[a, 0, 1], &[1, b, 0], &[0, 1, c]])
        .expect("four vectors of arity 3")
}

pub fn vertex_p(p: FamilyParams) -> VertexP {
    let (a, b, c) = (BigInt::from(p.a), BigInt::from(p.b), BigInt::from(p.c));
    let one = BigInt::from(1);
    let d = &a * &b * &c + &one;
    let q = |num: BigInt| Rational::new(num, d.clone());
    VertexP {
        alpha: q(&a * (&b * &c - &b + &one)),
        beta: q(&b * (&a * &c - &c + &one)),
        gamma: q(&c * (&a * &b - &a + &one)),
    }
}

/// `abc + 1`.
pub fn quasi_period(p: FamilyParams) -> u64 {
    p.a as u64 * p.b as u64 * p.c as u64 + 1
}

/// `α + β + γ`.
pub fn leading_coefficient(p: FamilyParams) -> Rational {
    vertex_p(p).sum()
}

/// Closed-form inequalities of `NP(I)`, three shared with `SP(I)` and three
/// cutting off the vertex. Valid when `a, b, c >= 2`; with a parameter equal
/// to 1 the generator `xyz` is no longer minimal and the shape changes.
pub fn np_rows(p: FamilyParams) -> Vec<HRow> {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    let mut rows = sp_rows(p);
    rows.extend([
        HRow::new(vec![c - 1, (a - 1) * (c - 1), 1], (a - 1) * (c - 1) + c),
        HRow::new(vec![(b - 1) * (c - 1), 1, b - 1], (b - 1) * (c - 1) + b),
        HRow::new(vec![1, a - 1, (a - 1) * (b - 1)], (a - 1) * (b - 1) + a),
    ]);
    rows
}

/// `u + a v >= a`, `v + b w >= b`, `c u + w >= c`.
pub fn sp_rows(p: FamilyParams) -> Vec<HRow> {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    vec![
        HRow::new(vec![1, a, 0], a),
        HRow::new(vec![0, 1, b], b),
        HRow::new(vec![c, 0, 1], c),
    ]
}

fn to_vector(u: [i64; 3]) -> ExponentVector {
    ExponentVector::new(
        u.iter()
            .map(|&e| u32::try_from(e).expect("face exponents are nonnegative"))
            .collect(),
    )
}

/// The union of the three parameterized face families, each over `1..=n-1`.
pub fn face_generators(p: FamilyParams, n: u32) -> BTreeSet<ExponentVector> {
    let (a, b, c, n) = (p.a as i64, p.b as i64, p.c as i64, n as i64);
    let mut out = BTreeSet::new();
    for t in 1..n {
        // u/a + v = n, parameter v
        let w = (n - Integer::div_floor(&t, &b)).max(c * n + c * a * t - c * a * n);
        out.insert(to_vector([a * n - a * t, t, w]));
        // v/b + w = n, parameter w
        let u = (n - Integer::div_floor(&t, &c)).max(a * n - a * b * n + a * b * t);
        out.insert(to_vector([u, b * n - b * t, t]));
        // w/c + u = n, parameter u
        let v = (n - Integer::div_floor(&t, &a)).max(b * n - b * c * n + b * c * t);
        out.insert(to_vector([t, v, c * n - c * t]));
    }
    out
}

/// `R_n = ⌈nP⌉` when it is a minimal generator of `I^(n)` outside `I^n` lying on no face.
pub fn off_face_generator(p: FamilyParams, n: u32) -> Option<ExponentVector> {
    let v = vertex_p(p);
    let big_n = Rational::from_integer(n.into());
    let ceil = |x: &Rational| -> i64 {
        i64::try_from((x * &big_n).ceil().to_integer()).expect("vertex coordinates are small")
    };
    let r = [ceil(&v.alpha), ceil(&v.beta), ceil(&v.gamma)];
    let (a, b, c, ni) = (p.a as i64, p.b as i64, p.c as i64, n as i64);
    if r[0] % a == 0 || r[1] % b == 0 || r[2] % c == 0 {
        return None;
    }
    if r[0] + a * r[1] == a * ni || r[1] + b * r[2] == b * ni || r[2] + c * r[0] == c * ni {
        return None;
    }
    let rv = to_vector(r);
    is_quotient_generator(p, &rv, n).then_some(rv)
}

/// `m` is a minimal generator of `I^(n)` outside `I^n`. Powers of `I` are
/// integrally closed, so `m ∉ I^n` is decided on `n·NP(I)`.
fn is_quotient_generator(p: FamilyParams, m: &ExponentVector, n: u32) -> bool {
    let fam = p.components();
    if !height2_member(m, &fam, n).expect("arity 3") {
        return false;
    }
    for i in 0..3 {
        if m[i] == 0 {
            continue;
        }
        let mut lowered = m.clone().into_vec();
        lowered[i] -= 1;
        if height2_member(&ExponentVector::new(lowered), &fam, n).expect("arity 3") {
            return false;
        }
    }
    let np = np_of(&family_ideal(p)).expect("nonzero ideal");
    !v_member(&np, &RationalPoint::from(m), n).expect("arity 3")
}

/// The points of [`face_generators`] that are minimal generators of
/// `I^(n)/I^n`. When `a, b, c >= 2` this is every point; with a parameter
/// equal to 1 some formulas land inside `I^n` or off the staircase.
pub fn face_quotient_generators(p: FamilyParams, n: u32) -> BTreeSet<ExponentVector> {
    face_generators(p, n)
        .into_iter()
        .filter(|m| is_quotient_generator(p, m, n))
        .collect()
}

/// `sdef_I(n) = #M(n) + [R_n is an off-face generator]`, with `M(n)` the
/// face points that are quotient generators.
pub fn family_sdef(p: FamilyParams, n: u32) -> Result<usize> {
    match n {
        0 => Err(Error::ZeroPower),
        // The branch formulas start at n = 2; defer to the general engine.
        1 => sdef(&family_ideal(p), 1),
        _ => {
            Ok(face_quotient_generators(p, n).len()
                + usize::from(off_face_generator(p, n).is_some()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{hrep, np_of, sp_of, HPolyhedron};
    use crate::symbolic::symbolic_power;

    fn fp(a: u32, b: u32, c: u32) -> FamilyParams {
        FamilyParams::new(a, b, c).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ideal_is_the_triple_intersection() {
        for p in [fp(1, 1, 1), fp(2, 2, 2), fp(2, 3, 4), fp(3, 1, 2)] {
            assert_eq!(family_ideal(p), p.components().to_ideal().unwrap());
        }
        let triangle =
            MonomialIdeal::from_exponents(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(family_ideal(fp(1, 1, 1)), triangle);
        assert!(FamilyParams::new(0, 1, 1).is_err());
    }

    #[test]
    fn vertex_values() {
        assert_eq!(
            vertex_p(fp(1, 1, 1)),
            VertexP {
                alpha: q(1, 2),
                beta: q(1, 2),
                gamma: q(1, 2)
            }
        );
        assert_eq!(
            vertex_p(fp(2, 3, 4)),
            VertexP {
                alpha: q(4, 5),
                beta: q(3, 5),
                gamma: q(4, 5)
            }
        );
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                for c in 1..=6u32 {
                    let v = vertex_p(fp(a, b, c));
                    let (ar, br, cr) = (q(a as i64, 1), q(b as i64, 1), q(c as i64, 1));
                    assert_eq!(&v.alpha + &ar * &v.beta, ar);
                    assert_eq!(&v.beta + &br * &v.gamma, br);
                    assert_eq!(&cr * &v.alpha + &v.gamma, cr);
                }
            }
        }
    }

    #[test]
    fn period_and_coefficient() {
        assert_eq!(
            (quasi_period(fp(1, 1, 1)), leading_coefficient(fp(1, 1, 1))),
            (2, q(3, 2))
        );
        assert_eq!(
            (quasi_period(fp(2, 3, 4)), leading_coefficient(fp(2, 3, 4))),
            (25, q(11, 5))
        );
        // α, β, γ = 2/3, 1/3, 2/3; the general engine gives sdef(n + 3) - sdef(n) = 5
        assert_eq!(
            (quasi_period(fp(1, 1, 2)), leading_coefficient(fp(1, 1, 2))),
            (3, q(5, 3))
        );
    }

    #[test]
    fn closed_form_rows_match_hrep() {
        for a in 2..=3 {
            for b in 2..=4 {
                for c in 2..=3 {
                    let p = fp(a, b, c);
                    let i = family_ideal(p);
                    let np = HPolyhedron::from_rows(3, np_rows(p)).unwrap();
                    assert_eq!(np, hrep(&np_of(&i).unwrap()).unwrap(), "{p:?}");
                    let sp = HPolyhedron::from_rows(3, sp_rows(p)).unwrap();
                    assert_eq!(sp, sp_of(&i).unwrap().hrep().unwrap(), "{p:?}");
                }
            }
        }
    }

    #[test]
    fn face_generators_small_cases() {
        assert!(face_generators(fp(2, 3, 4), 1).is_empty());
        // all three formulas land on xyz when a = b = c = 1 and n = 2
        let m = face_generators(fp(1, 1, 1), 2);
        assert_eq!(
            m.into_iter().collect::<Vec<_>>(),
            vec![ExponentVector::from([1, 1, 1])]
        );
    }

    #[test]
    fn face_generators_are_quotient_generators() {
        for p in [fp(1, 1, 1), fp(2, 3, 4), fp(3, 2, 2), fp(3, 2, 1)] {
            let i = family_ideal(p);
            for n in 2..=6 {
                let sym = symbolic_power(&i, n).unwrap();
                let pow = i.power(n).unwrap();
                if p.a > 1 && p.b > 1 && p.c > 1 {
                    assert_eq!(face_quotient_generators(p, n), face_generators(p, n));
                }
                for g in face_quotient_generators(p, n) {
                    assert!(sym.generators().contains(&g), "{p:?} n={n} {g:?}");
                    assert!(!pow.member(&g).unwrap());
                }
            }
        }
    }

    #[test]
    fn off_face_residues_for_234() {
        let p = fp(2, 3, 4);
        // n ≡ 1 (mod 5) also yields one from n = 6 on, e.g. (5, 4, 5)
        for n in 1..=30 {
            assert_eq!(
                off_face_generator(p, n).is_some(),
                n > 1 && matches!(n % 5, 1 | 3),
                "n={n}"
            );
        }
        assert_eq!(
            off_face_generator(p, 6),
            Some(ExponentVector::from([5, 4, 5]))
        );
        assert_eq!(
            off_face_generator(p, 3),
            Some(ExponentVector::from([3, 2, 3]))
        );
        assert_eq!(off_face_generator(p, 4), None);
    }

    #[test]
    fn off_face_point_is_the_extra_generator() {
        for p in [fp(2, 3, 4), fp(2, 2, 3), fp(3, 1, 2)] {
            let i = family_ideal(p);
            for n in 2..=8 {
                let sym = symbolic_power(&i, n).unwrap();
                let pow = i.power(n).unwrap();
                let faces = face_generators(p, n);
                let extra: Vec<ExponentVector> = sym
                    .generators()
                    .iter()
                    .filter(|g| !pow.member(g).unwrap() && !faces.contains(g))
                    .cloned()
                    .collect();
                assert_eq!(
                    extra,
                    off_face_generator(p, n).into_iter().collect::<Vec<_>>(),
                    "{p:?} n={n}"
                );
            }
        }
    }

    #[test]
    fn closed_form_matches_general_engine() {
        for a in 1..=2 {
            for b in 1..=2 {
                for c in 1..=2 {
                    let p = fp(a, b, c);
                    for n in 1..=6 {
                        assert_eq!(
                            family_sdef(p, n).unwrap(),
                            sdef(&family_ideal(p), n).unwrap()
                        );
                    }
                }
            }
        }
        let want = [0, 3, 6, 8, 9, 12, 14, 17, 19, 20];
        for (n, &w) in (1..=10).zip(&want) {
            assert_eq!(family_sdef(fp(2, 3, 4), n).unwrap(), w, "n={n}");
        }
    }
}
