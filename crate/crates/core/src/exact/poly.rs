use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies
/// `x^i`. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RationalPolynomial {
    #[serde(with = "rational::serde_vec")]
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x + shift`
    pub fn linear(shift: Rational) -> Self {
        Self::new(vec![shift, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rational::int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        let mut sq = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            exp >>= 1;
            if exp > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Rising factorial `(x + shift)(x + shift + 1)...(x + shift + n - 1)` as a
    /// polynomial in `x`; the empty product is 1.
    pub fn rising(shift: &Rational, n: usize) -> Self {
        (0..n).fold(Self::constant(Rational::one()), |acc, j| {
            &acc * &Self::linear(shift + rational::int(j as i64))
        })
    }

    /// Sum of absolute values of the coefficients; zero exactly for the zero
    /// polynomial.
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(rational::abs).sum()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Narrows a sign change of `p` on `[lo, hi]` to an interval of width at most
/// `width` by bisection. Every decision is an exact rational sign test.
///
/// A root hit exactly (at an endpoint or a midpoint) is returned as the
/// degenerate interval `[root, root]`.
pub fn isolate_root(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<(Rational, Rational)> {
    if lo >= hi {
        return Err(Error::InvalidInterval(format!("lo = {lo} must be < hi = {hi}")));
    }
    if width <= &Rational::zero() {
        return Err(Error::InvalidInterval(format!("width {width} must be positive")));
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let s_lo = rational::sign(&p.eval(&lo));
    let s_hi = rational::sign(&p.eval(&hi));
    if s_lo == 0 {
        return Ok((lo.clone(), lo));
    }
    if s_hi == 0 {
        return Ok((hi.clone(), hi));
    }
    if s_lo == s_hi {
        return Err(Error::SameSign { lo: lo.to_string(), hi: hi.to_string() });
    }
    let two = rational::int(2);
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        match rational::sign(&p.eval(&mid)) {
            0 => return Ok((mid.clone(), mid)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn eval_examples() {
        assert_eq!(RationalPolynomial::from_ints(&[0]).eval(&frac(7, 3)), int(0));
        assert!(RationalPolynomial::from_ints(&[0]).is_zero());
        let sq = RationalPolynomial::from_ints(&[1, -2, 1]);
        assert_eq!(sq.eval(&int(1)), int(0));
        assert_eq!(sq.eval(&frac(1, 2)), frac(1, 4));
    }

    #[test]
    fn derivative_examples() {
        assert!(RationalPolynomial::from_ints(&[5]).derivative().is_zero());
        assert_eq!(
            RationalPolynomial::from_ints(&[0, 0, 1]).derivative(),
            RationalPolynomial::from_ints(&[0, 2])
        );
        let d = RationalPolynomial::from_ints(&[1, -2, 1]).derivative();
        assert_eq!(d, RationalPolynomial::from_ints(&[-2, 2]));
        assert_eq!(d.eval(&int(1)), int(0));
    }

    #[test]
    fn rising_matches_hand_expansion() {
        // (x + 1)(x + 2) = x^2 + 3x + 2
        let p = RationalPolynomial::rising(&int(1), 2);
        assert_eq!(p, RationalPolynomial::from_ints(&[2, 3, 1]));
        assert_eq!(RationalPolynomial::rising(&int(4), 0), RationalPolynomial::from_ints(&[1]));
    }

    #[test]
    fn isolate_quadratic_root() {
        let p = RationalPolynomial::from_ints(&[-1, 0, 4]);
        let w = frac(1, 1024);
        let (l, h) = isolate_root(&p, &int(0), &int(1), &w).unwrap();
        assert!(l <= frac(1, 2) && frac(1, 2) <= h);
        assert!(&h - &l <= w);
    }

    #[test]
    fn isolate_linear_root() {
        let p = RationalPolynomial::from_ints(&[-1, 2]);
        let (l, h) = isolate_root(&p, &int(0), &int(1), &frac(1, 2)).unwrap();
        assert!(l <= frac(1, 2) && frac(1, 2) <= h);
    }

    #[test]
    fn isolate_rejects_same_sign() {
        let p = RationalPolynomial::from_ints(&[1, 0, 1]);
        assert!(matches!(
            isolate_root(&p, &int(0), &int(1), &frac(1, 8)),
            Err(Error::SameSign { .. })
        ));
    }

    #[test]
    fn isolate_root_at_endpoint_is_degenerate() {
        let p = RationalPolynomial::from_ints(&[0, 1]);
        let (l, h) = isolate_root(&p, &int(0), &int(1), &frac(1, 8)).unwrap();
        assert_eq!((l, h), (int(0), int(0)));
    }

    #[test]
    fn isolate_rejects_bad_interval() {
        let p = RationalPolynomial::from_ints(&[-1, 2]);
        assert!(isolate_root(&p, &int(1), &int(0), &frac(1, 8)).is_err());
        assert!(isolate_root(&p, &int(0), &int(1), &int(0)).is_err());
    }

    fn small_poly() -> impl Strategy<Value = RationalPolynomial> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..7).prop_map(|cs| {
            RationalPolynomial::new(cs.into_iter().map(|(n, d)| frac(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn derivative_drops_degree_by_one(p in small_poly()) {
            let d = p.derivative();
            match p.degree() {
                Some(k) if k >= 1 => prop_assert_eq!(d.degree(), Some(k - 1)),
                _ => prop_assert!(d.is_zero()),
            }
        }

        // |(p(x+h) - p(x))/h - p'(x)| <= C h with C = sum |p_i| (|x| + 1)^i
        // for |h| <= 1, from the Taylor remainder.
        #[test]
        fn derivative_matches_difference_quotient(
            p in small_poly(),
            (xn, xd) in (-30i64..30, 1i64..10),
        ) {
            let x = frac(xn, xd);
            let ax1 = rational::abs(&x) + int(1);
            let c: Rational = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, pi)| rational::abs(pi) * rational::pow_u(&ax1, i as u32))
                .sum();
            let dp = p.derivative().eval(&x);
            for k in 3..=6u32 {
                let h = rational::pow_u(&frac(1, 10), k);
                let quotient = (p.eval(&(&x + &h)) - p.eval(&x)) / &h;
                prop_assert!(rational::abs(&(quotient - &dp)) <= &c * &h);
            }
        }

        #[test]
        fn product_evaluates_pointwise(a in small_poly(), b in small_poly(), x in -10i64..10) {
            let x = int(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a - &b).eval(&x), a.eval(&x) - b.eval(&x));
        }

        #[test]
        fn isolated_interval_brackets_sign_change(
            roots in prop::collection::vec(1i64..99, 1..4),
            wk in 1u32..30,
        ) {
            // product of (x - r/100) over distinct roots; odd root count gives
            // opposite signs at 0 and 1.
            let mut roots = roots;
            roots.sort();
            roots.dedup();
            prop_assume!(roots.len() % 2 == 1);
            let p = roots.iter().fold(RationalPolynomial::from_ints(&[1]), |acc, &r| {
                &acc * &RationalPolynomial::linear(-frac(r, 100))
            });
            let w = rational::pow_u(&frac(1, 2), wk);
            let (l, h) = isolate_root(&p, &int(0), &int(1), &w).unwrap();
            prop_assert!(&h - &l <= w);
            prop_assert!(int(0) <= l && h <= int(1));
            prop_assert!(rational::sign(&(p.eval(&l) * p.eval(&h))) <= 0);
        }
    }
}
