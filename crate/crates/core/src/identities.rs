//! Exact checks of the combinatorial identities behind the symmetric case
//! `H_{n,n}(1/2) = 0`: the alternating half-integer Pochhammer sum, the
//! finite Kummer-type sum and its two consequences, the classical Kummer
//! identity at `z = -1`, and the auxiliary polynomial `L`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{self, from_big, half, int, Rational};
use crate::exact::RationalPolynomial;
use crate::special::{binomial, factorial, hyp2f1_terminating, pochhammer, HypergeometricParams};
use crate::verdict::{IdentityVerdict, Params};

fn c(n: u32, k: u32) -> Rational {
    from_big(binomial(u64::from(n), u64::from(k)))
}

fn fact(n: u32) -> Rational {
    from_big(factorial(n))
}

fn sign(i: u32) -> Rational {
    if i.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn require_l_le_r(l: u32, r: u32) -> Result<()> {
    if l == 0 || l > r {
        Err(Error::OutOfRange(format!("need 1 <= l <= r, got l = {l}, r = {r}")))
    } else {
        Ok(())
    }
}

/// `sum_{i=0}^{2r} (-1)^i C(2r, i) (1/2)_{n+2r-i} (1/2)_{n+i} = 2^{2r} (1/2)_n (1/2)_r (1/2)_{n+r}`
pub fn check_symmetric_identity(n: u32, r: u32) -> Result<IdentityVerdict> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be >= 1".into()));
    }
    let h = half();
    let lhs: Rational = (0..=2 * r)
        .map(|i| sign(i) * c(2 * r, i) * pochhammer(&h, n + 2 * r - i) * pochhammer(&h, n + i))
        .sum();
    let rhs = rational::pow_u(&int(2), 2 * r) * pochhammer(&h, n) * pochhammer(&h, r) * pochhammer(&h, n + r);
    Ok(IdentityVerdict::new("symmetric", Params::new().int("n", n).int("r", r), lhs, rhs))
}

/// The sum of the finite Kummer-type identity,
/// `sum_{i=0}^{l-1} C(2r, i) C(l-1, i) / C(2r-l, i)`.
pub fn finite_kummer_sum(l: u32, r: u32) -> Rational {
    (0..l).map(|i| c(2 * r, i) * c(l - 1, i) / c(2 * r - l, i)).sum()
}

/// `sum_{i=0}^{l-1} C(2r, i) C(l-1, i) / C(2r-l, i) = (2r)! / (2 r! r! C(2r-l, r))` for `1 <= l <= r`.
pub fn check_finite_kummer(l: u32, r: u32) -> Result<IdentityVerdict> {
    require_l_le_r(l, r)?;
    let rhs = fact(2 * r) / (int(2) * fact(r) * fact(r) * c(2 * r - l, r));
    Ok(IdentityVerdict::new("finite_kummer", Params::new().int("l", l).int("r", r), finite_kummer_sum(l, r), rhs))
}

/// `(2 r! (l-1)! (2r-2l+1)! / ((2r)! (r-l)!)) sum_{i=0}^{l-1} C(2r, i) C(2r-l-i, 2r-2l+1) = 1`
pub fn check_binomial_product_sum(l: u32, r: u32) -> Result<IdentityVerdict> {
    require_l_le_r(l, r)?;
    let prefactor = int(2) * fact(r) * fact(l - 1) * fact(2 * r - 2 * l + 1) / (fact(2 * r) * fact(r - l));
    let sum: Rational = (0..l).map(|i| c(2 * r, i) * c(2 * r - l - i, 2 * r - 2 * l + 1)).sum();
    Ok(IdentityVerdict::new("binomial_product_sum", Params::new().int("l", l).int("r", r), prefactor * sum, Rational::one()))
}

/// `sum_{i=0}^{l-1} C(l-1, i) / C(2r-i, l) = 1 / (2 C(r, l))`
pub fn check_reciprocal_binomial_sum(l: u32, r: u32) -> Result<IdentityVerdict> {
    require_l_le_r(l, r)?;
    let lhs: Rational = (0..l).map(|i| c(l - 1, i) / c(2 * r - i, l)).sum();
    let rhs = (int(2) * c(r, l)).recip();
    Ok(IdentityVerdict::new("reciprocal_binomial_sum", Params::new().int("l", l).int("r", r), lhs, rhs))
}

/// Kummer's identity at `z = -1`:
/// `F(-2r, b, 1 - 2r - b; -1) = (b)_r (2r)! / (r! (b)_{2r})` for `b > 0`.
pub fn check_kummer_classical(r: u32, b: &Rational) -> Result<IdentityVerdict> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be >= 1".into()));
    }
    if b <= &Rational::zero() {
        return Err(Error::OutOfRange(format!("b must be positive, got {b}")));
    }
    let two_r = int(2 * i64::from(r));
    let lhs = hyp2f1_terminating(&HypergeometricParams::new(
        -&two_r,
        b.clone(),
        Rational::one() - &two_r - b,
        -Rational::one(),
    ))?;
    let rhs = pochhammer(b, r) * fact(2 * r) / (fact(r) * pochhammer(b, 2 * r));
    Ok(IdentityVerdict::new("kummer_classical", Params::new().int("r", r).rat("b", b), lhs, rhs))
}

/// `L(x) + 1`, i.e. the left side of the normalized symmetric identity as a
/// polynomial in `x`:
///
/// `(2 r!/(2r)!) sum_{i<r} (-1)^i C(2r, i) (x+1+r)_{r-i} (x+1)_i + ((-1)^r / r!) (x+1)_r`
///
/// Built by multiplying out the rising factorials coefficient by coefficient.
pub fn polynomial_l_plus_one(r: u32) -> RationalPolynomial {
    let one = Rational::one();
    let shift_hi = &one + int(i64::from(r));
    let lead = int(2) * fact(r) / fact(2 * r);
    let mut acc = RationalPolynomial::zero();
    for i in 0..r {
        let term = &RationalPolynomial::rising(&shift_hi, (r - i) as usize) * &RationalPolynomial::rising(&one, i as usize);
        acc = &acc + &term.scale(&(&lead * sign(i) * c(2 * r, i)));
    }
    let tail = RationalPolynomial::rising(&one, r as usize).scale(&(sign(r) / fact(r)));
    &acc + &tail
}

/// The auxiliary polynomial `L`; it vanishes identically.
pub fn build_polynomial_l(r: u32) -> Result<RationalPolynomial> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be >= 1".into()));
    }
    Ok(&polynomial_l_plus_one(r) - &RationalPolynomial::constant(Rational::one()))
}

/// Verdict that `L` is the zero polynomial: compares the sum of absolute
/// coefficient values against 0.
pub fn check_polynomial_l(r: u32) -> Result<IdentityVerdict> {
    let l = build_polynomial_l(r)?;
    Ok(IdentityVerdict::new("polynomial_L", Params::new().int("r", r), l.l1_norm(), Rational::zero()))
}

/// Ranges for [`run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteRanges {
    pub n_max: u32,
    pub r_max: u32,
    pub l_max: u32,
    pub kummer_r_max: u32,
    pub kummer_b: Vec<Rational>,
}

impl Default for SuiteRanges {
    fn default() -> Self {
        SuiteRanges {
            n_max: 8,
            r_max: 8,
            l_max: 20,
            kummer_r_max: 5,
            kummer_b: vec![rational::frac(1, 3), rational::frac(1, 2), rational::frac(3, 2), rational::frac(7, 3)],
        }
    }
}

/// Every identity over the given ranges: the symmetric identity for
/// `0 <= n <= n_max, 1 <= r <= r_max`; the three `(l, r)` identities for
/// `1 <= l <= r <= l_max`; Kummer for `r <= kummer_r_max` and each `b`; and
/// `L == 0` for `r <= r_max`.
pub fn run_suite(ranges: &SuiteRanges) -> Result<Vec<IdentityVerdict>> {
    let mut out = Vec::new();
    for n in 0..=ranges.n_max {
        for r in 1..=ranges.r_max {
            out.push(check_symmetric_identity(n, r)?);
        }
    }
    for r in 1..=ranges.l_max {
        for l in 1..=r {
            out.push(check_finite_kummer(l, r)?);
            out.push(check_binomial_product_sum(l, r)?);
            out.push(check_reciprocal_binomial_sum(l, r)?);
        }
    }
    for r in 1..=ranges.kummer_r_max {
        for b in &ranges.kummer_b {
            out.push(check_kummer_classical(r, b)?);
        }
    }
    for r in 1..=ranges.r_max {
        out.push(check_polynomial_l(r)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn symmetric_small_cases() {
        let v = check_symmetric_identity(0, 1).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(1), int(1)));
        assert!(check_symmetric_identity(1, 1).unwrap().holds);
        assert!(check_symmetric_identity(0, 0).is_err());
    }

    #[test]
    fn symmetric_exhaustive() {
        for n in 0..=8 {
            for r in 1..=8 {
                assert!(check_symmetric_identity(n, r).unwrap().holds, "n={n} r={r}");
            }
        }
    }

    #[test]
    fn finite_kummer_hand_cases() {
        let v = check_finite_kummer(1, 2).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(1), int(1)));
        let v = check_finite_kummer(2, 2).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(3), int(3)));
        assert!(matches!(check_finite_kummer(3, 2), Err(Error::OutOfRange(_))));
        assert!(matches!(check_finite_kummer(0, 2), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn product_and_reciprocal_sums_hand_cases() {
        assert_eq!(check_binomial_product_sum(1, 1).unwrap().lhs, int(1));
        for r in 1..=6 {
            assert!(check_binomial_product_sum(r, r).unwrap().holds);
        }
        let v = check_reciprocal_binomial_sum(1, 1).unwrap();
        assert_eq!((v.lhs.clone(), v.rhs.clone()), (frac(1, 2), frac(1, 2)));
        let v = check_reciprocal_binomial_sum(1, 3).unwrap();
        assert_eq!(v.lhs, frac(1, 6));
        assert!(v.holds);
        assert!(check_binomial_product_sum(2, 1).is_err());
        assert!(check_reciprocal_binomial_sum(4, 3).is_err());
    }

    #[test]
    fn l_r_identities_exhaustive() {
        for r in 1..=20 {
            for l in 1..=r {
                assert!(check_finite_kummer(l, r).unwrap().holds, "finite_kummer l={l} r={r}");
                assert!(check_binomial_product_sum(l, r).unwrap().holds, "binomial_product_sum l={l} r={r}");
                assert!(check_reciprocal_binomial_sum(l, r).unwrap().holds, "reciprocal_binomial_sum l={l} r={r}");
            }
        }
    }

    // The chain linking the two: with C(2r-l-i, 2r-2l+1) = C(2r-l, l-1) C(l-1, i) / C(2r-l, i),
    // the prefactored sum of the second equals (2 r! r! / (2r)!) C(2r-l, r) times the first sum.
    #[test]
    fn product_sum_rederives_finite_kummer() {
        for r in 1..=10 {
            for l in 1..=r {
                let prefactor = int(2) * fact(r) * fact(l - 1) * fact(2 * r - 2 * l + 1) / (fact(2 * r) * fact(r - l));
                let rewritten: Rational = (0..l)
                    .map(|i| c(2 * r, i) * c(2 * r - l, l - 1) * c(l - 1, i) / c(2 * r - l, i))
                    .sum();
                let via_25 = int(2) * fact(r) * fact(r) / fact(2 * r) * c(2 * r - l, r) * finite_kummer_sum(l, r);
                assert_eq!(&prefactor * rewritten, via_25);
                assert_eq!(via_25, check_binomial_product_sum(l, r).unwrap().lhs);
            }
        }
    }

    #[test]
    fn kummer_cases() {
        assert!(check_kummer_classical(1, &frac(1, 2)).unwrap().holds);
        assert!(check_kummer_classical(2, &frac(1, 3)).unwrap().holds);
        // c = -2: (c)_1 and (c)_2 are nonzero, so the series is well defined
        assert!(check_kummer_classical(1, &int(1)).unwrap().holds);
        // r = 2, b = 1: c = -4 and (c)_4 = 24 != 0
        assert!(check_kummer_classical(2, &int(1)).unwrap().holds);
        // nonpositive b is outside the identity's range
        assert!(matches!(
            check_kummer_classical(2, &frac(-1, 1)),
            Err(Error::OutOfRange(_))
        ));
        for r in 1..=5 {
            for b in [frac(1, 3), frac(1, 2), frac(3, 2), frac(7, 3)] {
                assert!(check_kummer_classical(r, &b).unwrap().holds, "r={r} b={b}");
            }
        }
    }

    #[test]
    fn polynomial_l_vanishes() {
        for r in 1..=8 {
            let l = build_polynomial_l(r).unwrap();
            assert!(l.is_zero(), "r={r}: {l}");
            // the terms before cancellation really have degree r
            assert_eq!(polynomial_l_plus_one(r).degree(), Some(0));
            assert!(check_polynomial_l(r).unwrap().holds);
        }
    }

    #[test]
    fn l_roots_before_cancellation_are_known() {
        // L(-l) = 0 for 1 <= l <= r and L(0) = 0, evaluated on the unsimplified sum
        for r in 1..=8u32 {
            let lp1 = polynomial_l_plus_one(r);
            for l in 0..=r {
                assert_eq!(lp1.eval(&int(-i64::from(l))), int(1));
            }
        }
    }

    #[test]
    fn symmetric_identity_is_l_at_half_integers() {
        for n in 0..=6u32 {
            for r in 1..=6u32 {
                let v = check_symmetric_identity(n, r).unwrap();
                let x = int(i64::from(n)) - half();
                let lp1 = polynomial_l_plus_one(r).eval(&x);
                assert_eq!(lp1, &v.lhs / &v.rhs);
                assert!(build_polynomial_l(r).unwrap().eval(&x).is_zero());
            }
        }
    }

    #[test]
    fn suite_defaults_all_hold() {
        let all = run_suite(&SuiteRanges::default()).unwrap();
        assert!(all.iter().all(|v| v.holds));
        assert_eq!(all.len(), 9 * 8 + 3 * 210 + 5 * 4 + 8);
    }
}
