use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::RationalPolynomial;

/// Parameters of `F(a, b, c; z) = sum_i (a)_i (b)_i / (c)_i z^i / i!`.
///
/// Only the terminating case is evaluated: `a` must be a nonpositive integer,
/// and `(c)_i` must not vanish for `i <= |a|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergeometricParams {
    #[serde(with = "rational::serde_str")]
    pub a: Rational,
    #[serde(with = "rational::serde_str")]
    pub b: Rational,
    #[serde(with = "rational::serde_str")]
    pub c: Rational,
    #[serde(with = "rational::serde_str")]
    pub z: Rational,
}

impl HypergeometricParams {
    pub fn new(a: Rational, b: Rational, c: Rational, z: Rational) -> Self {
        HypergeometricParams { a, b, c, z }
    }

    fn with(&self, a: Rational, b: Rational, c: Rational) -> Self {
        HypergeometricParams { a, b, c, z: self.z.clone() }
    }
}

/// Number of nonzero terms minus one, i.e. `|a|`.
fn series_length(a: &Rational) -> Result<usize> {
    rational::as_integer(a)
        .filter(|n| !n.is_positive())
        .and_then(|n| (-n).to_usize())
        .ok_or_else(|| Error::NonTerminating(a.to_string()))
}

/// `F(a, b, c; z)` as a polynomial in `z` of degree at most `|a|`.
pub fn hyp2f1_polynomial(a: &Rational, b: &Rational, c: &Rational) -> Result<RationalPolynomial> {
    let len = series_length(a)?;
    let mut coeffs = Vec::with_capacity(len + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for i in 0..len {
        let shift = rational::int(i as i64);
        let denom = c + &shift;
        if denom.is_zero() {
            return Err(Error::PoleBeforeTermination { c: c.to_string(), index: i + 1 });
        }
        term = term * (a + &shift) * (b + &shift) / (denom * rational::int(i as i64 + 1));
        coeffs.push(term.clone());
    }
    Ok(RationalPolynomial::new(coeffs))
}

pub fn hyp2f1_terminating(p: &HypergeometricParams) -> Result<Rational> {
    Ok(hyp2f1_polynomial(&p.a, &p.b, &p.c)?.eval(&p.z))
}

/// Pfaff's transformation for terminating series,
/// `F(a, b, c; z) = (1 - z)^{-a} F(a, c - b, c; z / (z - 1))`, checked exactly.
pub fn pfaff_check(p: &HypergeometricParams) -> Result<bool> {
    let one = Rational::one();
    if p.z == one {
        return Err(Error::OutOfRange("Pfaff transformation needs z != 1".into()));
    }
    let len = series_length(&p.a)? as u32;
    let lhs = hyp2f1_terminating(p)?;
    let w = &p.z / (&p.z - &one);
    let rhs = rational::pow_u(&(&one - &p.z), len)
        * hyp2f1_terminating(&HypergeometricParams::new(p.a.clone(), &p.c - &p.b, p.c.clone(), w))?;
    Ok(lhs == rhs)
}

/// The instance used to bridge the two hypergeometric forms of the moment
/// polynomial:
///
/// `F(-2r, 1/2 + m, 1/2 - n - 2r; -z) = (1 + z)^{2r} F(-2r, -m - n - 2r, 1/2 - n - 2r; z / (1 + z))`.
pub fn pfaff_check_moment_form(r: u32, m: u32, n: u32, z: &Rational) -> Result<bool> {
    let one = Rational::one();
    if z == &-&one {
        return Err(Error::OutOfRange("needs z != -1".into()));
    }
    let (r, m, n) = (i64::from(r), i64::from(m), i64::from(n));
    let a = rational::int(-2 * r);
    let c = rational::half() - rational::int(n + 2 * r);
    let lhs = hyp2f1_terminating(&HypergeometricParams::new(
        a.clone(),
        rational::half() + rational::int(m),
        c.clone(),
        -z,
    ))?;
    let rhs = rational::pow_u(&(&one + z), 2 * r as u32)
        * hyp2f1_terminating(&HypergeometricParams::new(
            a,
            rational::int(-m - n - 2 * r),
            c,
            z / (&one + z),
        ))?;
    Ok(lhs == rhs)
}

/// Gauss contiguous relations and the differentiation formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ContiguousRelation {
    /// `c(1 - z) F - c F(a-1) + (c - b) z F(c+1) = 0`
    R38,
    /// `(b - a) F + a F(a+1) - b F(b+1) = 0`
    R32,
    /// `[c - 2b + (b - a) z] F + b (1 - z) F(b+1) - (c - b) F(b-1) = 0`
    R40,
    /// `d/dz F(a, b, c; z) = (ab / c) F(a+1, b+1, c+1; z)` as polynomials
    Diff,
}

impl ContiguousRelation {
    pub const ALL: [ContiguousRelation; 4] =
        [ContiguousRelation::R38, ContiguousRelation::R32, ContiguousRelation::R40, ContiguousRelation::Diff];
}

impl fmt::Display for ContiguousRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContiguousRelation::R38 => "R38",
            ContiguousRelation::R32 => "R32",
            ContiguousRelation::R40 => "R40",
            ContiguousRelation::Diff => "DIFF",
        })
    }
}

impl FromStr for ContiguousRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "R38" => Ok(ContiguousRelation::R38),
            "R32" => Ok(ContiguousRelation::R32),
            "R40" => Ok(ContiguousRelation::R40),
            "DIFF" => Ok(ContiguousRelation::Diff),
            _ => Err(Error::OutOfRange(format!("unknown relation {s:?}"))),
        }
    }
}

/// Checks one relation exactly at `p` (DIFF ignores `p.z` and compares
/// coefficient lists). Every series involved must terminate; a term whose
/// scalar factor is zero is skipped without being evaluated.
pub fn contiguous_check(relation: ContiguousRelation, p: &HypergeometricParams) -> Result<bool> {
    let one = Rational::one();
    let (a, b, c, z) = (&p.a, &p.b, &p.c, &p.z);
    let f = |q: HypergeometricParams| hyp2f1_terminating(&q);
    let sum = match relation {
        ContiguousRelation::R38 => {
            c * (&one - z) * f(p.clone())? - c * f(p.with(a - &one, b.clone(), c.clone()))?
                + (c - b) * z * f(p.with(a.clone(), b.clone(), c + &one))?
        }
        ContiguousRelation::R32 => {
            let mid = if a.is_zero() {
                Rational::zero()
            } else {
                a * f(p.with(a + &one, b.clone(), c.clone()))?
            };
            (b - a) * f(p.clone())? + mid - b * f(p.with(a.clone(), b + &one, c.clone()))?
        }
        ContiguousRelation::R40 => {
            (c - rational::int(2) * b + (b - a) * z) * f(p.clone())?
                + b * (&one - z) * f(p.with(a.clone(), b + &one, c.clone()))?
                - (c - b) * f(p.with(a.clone(), b - &one, c.clone()))?
        }
        ContiguousRelation::Diff => {
            let lhs = hyp2f1_polynomial(a, b, c)?.derivative();
            let rhs = if a.is_zero() || b.is_zero() {
                RationalPolynomial::zero()
            } else {
                let k = rational::checked_div(&(a * b), c)?;
                hyp2f1_polynomial(&(a + &one), &(b + &one), &(c + &one))?.scale(&k)
            };
            return Ok(lhs == rhs);
        }
    };
    Ok(sum.is_zero())
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use crate::special::pochhammer;
    use proptest::prelude::*;

    fn hp(a: Rational, b: Rational, c: Rational, z: Rational) -> HypergeometricParams {
        HypergeometricParams::new(a, b, c, z)
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(hyp2f1_terminating(&hp(int(-1), int(3), int(2), frac(1, 2))).unwrap(), frac(1, 4));
        assert_eq!(hyp2f1_terminating(&hp(int(-2), int(1), int(1), int(1))).unwrap(), int(0));
        assert_eq!(
            hyp2f1_terminating(&hp(int(-2), int(-2), frac(-3, 2), frac(1, 2))).unwrap(),
            frac(1, 3)
        );
        assert_eq!(hyp2f1_terminating(&hp(int(0), int(5), int(0), int(9))).unwrap(), int(1));
    }

    #[test]
    fn evaluation_errors() {
        assert!(matches!(
            hyp2f1_terminating(&hp(frac(1, 2), int(1), int(1), int(0))),
            Err(Error::NonTerminating(_))
        ));
        assert!(matches!(
            hyp2f1_terminating(&hp(int(2), int(1), int(1), int(0))),
            Err(Error::NonTerminating(_))
        ));
        // (c)_i with c = -1 vanishes at i = 2, inside a series of length 3
        assert_eq!(
            hyp2f1_terminating(&hp(int(-3), int(1), int(-1), int(1))),
            Err(Error::PoleBeforeTermination { c: "-1".into(), index: 2 })
        );
        // c = -2 with a = -2 only needs (c)_1 and (c)_2
        assert!(hyp2f1_terminating(&hp(int(-2), int(1), int(-2), int(1))).is_ok());
    }

    #[test]
    fn coefficients_are_pochhammer_ratios() {
        let (a, b, c) = (int(-4), frac(2, 3), frac(-5, 2));
        let p = hyp2f1_polynomial(&a, &b, &c).unwrap();
        assert!(p.degree().unwrap() <= 4);
        for i in 0..=4u32 {
            let expected = pochhammer(&a, i) * pochhammer(&b, i)
                / (pochhammer(&c, i) * pochhammer(&int(1), i));
            assert_eq!(p.coeff(i as usize), expected);
        }
    }

    #[test]
    fn pfaff_examples() {
        assert!(pfaff_check_moment_form(1, 0, 0, &frac(1, 3)).unwrap());
        assert!(pfaff_check_moment_form(1, 1, 0, &frac(1, 2)).unwrap());
        assert!(pfaff_check_moment_form(2, 3, 1, &int(0)).unwrap());
        assert!(pfaff_check_moment_form(1, 0, 0, &int(-1)).is_err());
        assert!(pfaff_check(&hp(int(-3), frac(1, 3), frac(7, 2), frac(2, 5))).unwrap());
        assert!(pfaff_check(&hp(int(-3), frac(1, 3), frac(7, 2), int(1))).is_err());
    }

    #[test]
    fn contiguous_examples() {
        let p = hp(int(-2), int(-3), frac(-7, 2), frac(1, 4));
        assert!(contiguous_check(ContiguousRelation::R32, &p).unwrap());
        let d = hp(int(-2), int(-2), frac(-3, 2), int(0));
        assert!(contiguous_check(ContiguousRelation::Diff, &d).unwrap());
        for rel in ContiguousRelation::ALL {
            assert!(contiguous_check(rel, &hp(int(-3), frac(1, 5), frac(9, 4), int(0))).unwrap());
        }
    }

    #[test]
    fn wrong_relation_is_detected() {
        // perturbing z in one term of R38 by hand must break it
        let p = hp(int(-3), frac(1, 5), frac(9, 4), frac(1, 3));
        let one = int(1);
        let f = |q: &HypergeometricParams| hyp2f1_terminating(q).unwrap();
        let broken = &p.c * (&one - &p.z) * f(&p) - &p.c * f(&hp(&p.a - &one, p.b.clone(), p.c.clone(), p.z.clone()))
            + (&p.c - &p.b) * &p.z * f(&hp(p.a.clone(), p.b.clone(), &p.c + &one, frac(1, 2)));
        assert!(!broken.is_zero());
    }

    #[test]
    fn relation_names_round_trip() {
        for rel in ContiguousRelation::ALL {
            assert_eq!(rel.to_string().parse::<ContiguousRelation>().unwrap(), rel);
        }
        assert!("R99".parse::<ContiguousRelation>().is_err());
    }

    /// Non-integer rationals for b and c never hit poles.
    fn non_integer() -> impl Strategy<Value = Rational> {
        (-30i64..30, 2i64..7, 1i64..7).prop_map(|(w, d, k)| int(w) + frac(k % d, d)).prop_filter(
            "non-integer",
            |x| !x.is_integer(),
        )
    }

    fn params() -> impl Strategy<Value = HypergeometricParams> {
        (-7i64..=-1, non_integer(), non_integer(), (-12i64..12, 1i64..8))
            .prop_map(|(a, b, c, (zn, zd))| hp(int(a), b, c, frac(zn, zd)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn all_relations_hold(p in params()) {
            for rel in ContiguousRelation::ALL {
                prop_assert!(contiguous_check(rel, &p).unwrap(), "{} failed at {:?}", rel, p);
            }
        }

        #[test]
        fn pfaff_holds(p in params()) {
            prop_assume!(p.z != int(1));
            prop_assert!(pfaff_check(&p).unwrap());
        }

        #[test]
        fn pfaff_moment_form_holds(r in 1u32..=4, m in 0u32..=4, n in 0u32..=4, (zn, zd) in (0i64..20, 1i64..9)) {
            prop_assert!(pfaff_check_moment_form(r, m, n, &frac(zn, zd)).unwrap());
        }
    }
}
