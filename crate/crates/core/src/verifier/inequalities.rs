use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{self, int, Rational};
use crate::moment::{gaussian_moment, univariate_even_moment, CovarianceMatrix, ExponentVector};
use crate::special::{binomial, half_binomial};
use crate::verdict::{InequalityVerdict, Params};

fn ev(k: &[u32]) -> ExponentVector {
    ExponentVector::new(k.to_vec())
}

fn require_positive(name: &str, x: &Rational) -> Result<()> {
    if x <= &Rational::zero() {
        Err(Error::OutOfRange(format!("{name} must be positive, got {x}")))
    } else {
        Ok(())
    }
}

/// Minimum of `C(i) = hb(m+r-i, r-i) hb(n+i, i)` over `0 <= i <= r`, where
/// `hb` is the half-binomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinC {
    /// First index attaining the minimum.
    pub argmin: u32,
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
    /// `hb(min(m, n) + r, r)`
    #[serde(with = "rational::serde_str")]
    pub closed_form: Rational,
    pub r: u32,
}

impl MinC {
    /// The minimum equals the closed form and sits at an end of the range.
    pub fn holds(&self) -> bool {
        self.value == self.closed_form && (self.argmin == 0 || self.argmin == self.r)
    }
}

pub fn min_c(m: u32, n: u32, r: u32) -> Result<MinC> {
    if m == 0 || n == 0 || r == 0 {
        return Err(Error::OutOfRange("min_c needs m, n, r >= 1".into()));
    }
    let mut best: Option<(u32, Rational)> = None;
    for i in 0..=r {
        let ci = half_binomial(m + r - i, r - i)? * half_binomial(n + i, i)?;
        if best.as_ref().is_none_or(|(_, v)| &ci < v) {
            best = Some((i, ci));
        }
    }
    let (argmin, value) = best.expect("r + 1 >= 1 candidates");
    Ok(MinC { argmin, value, closed_form: half_binomial(m.min(n) + r, r)?, r })
}

/// `E[X^{2m} Y^{2n} (X+Y)^{2r}] >= hb(min(m,n)+r, r) E[X^{2m}] E[Y^{2n}] E[(X+Y)^{2r}]`
/// for independent `X`, `Y` with variances `a2`, `b2`.
///
/// The bound is a positive mixture of the `C(i)` against their minimum, so
/// equality needs `C` constant in `i`, which happens exactly when `m == n` and
/// `r == 1`.
pub fn check_independent_sum(m: u32, n: u32, r: u32, a2: &Rational, b2: &Rational) -> Result<InequalityVerdict> {
    if m == 0 || n == 0 || r == 0 {
        return Err(Error::OutOfRange("independent sum check needs m, n, r >= 1".into()));
    }
    require_positive("a2", a2)?;
    require_positive("b2", b2)?;
    let z = Rational::zero();
    let cov = CovarianceMatrix::new(vec![
        vec![a2.clone(), z.clone(), a2.clone()],
        vec![z, b2.clone(), b2.clone()],
        vec![a2.clone(), b2.clone(), a2 + b2],
    ])?;
    let lhs = gaussian_moment(&cov, &ev(&[2 * m, 2 * n, 2 * r]))?;
    let rhs = half_binomial(m.min(n) + r, r)?
        * univariate_even_moment(a2, m)?
        * univariate_even_moment(b2, n)?
        * univariate_even_moment(&(a2 + b2), r)?;
    let params = Params::new().int("m", m).int("n", n).int("r", r).rat("a2", a2).rat("b2", b2);
    Ok(InequalityVerdict::new("prop21", params, lhs, rhs, m == n && r == 1))
}

/// `E[X^{2m} Y^{2n} (X^2 - Y^2)^{2r}] >= hb(min(m,n)+r, r) E[X^{2m}] E[Y^{2n}] (E[(X+Y)^{2r}])^2`
/// for independent `X`, `Y`; equality iff `m == n` and `a2 == b2`.
pub fn check_difference_of_squares(m: u32, n: u32, r: u32, a2: &Rational, b2: &Rational) -> Result<InequalityVerdict> {
    if r == 0 {
        return Err(Error::OutOfRange("difference of squares check needs r >= 1".into()));
    }
    require_positive("a2", a2)?;
    require_positive("b2", b2)?;
    // (X^2 - Y^2)^{2r} = sum_j C(2r, j) (-1)^j X^{2(2r-j)} Y^{2j}
    let mut lhs = Rational::zero();
    for j in 0..=2 * r {
        let term = rational::from_big(binomial(u64::from(2 * r), u64::from(j)))
            * univariate_even_moment(a2, m + 2 * r - j)?
            * univariate_even_moment(b2, n + j)?;
        if j % 2 == 0 {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    let sum_moment = univariate_even_moment(&(a2 + b2), r)?;
    let rhs = half_binomial(m.min(n) + r, r)?
        * univariate_even_moment(a2, m)?
        * univariate_even_moment(b2, n)?
        * &sum_moment
        * &sum_moment;
    let params = Params::new().int("m", m).int("n", n).int("r", r).rat("a2", a2).rat("b2", b2);
    Ok(InequalityVerdict::new("thm22", params, lhs, rhs, m == n && a2 == b2))
}

/// For `(Z, W)` with equal variances:
/// `E[Z^{2r} W^{2r} (Z+W)^{2m} (Z-W)^{2n}] >= hb(min(m,n)+r, r) (E[Z^{2r}])^2 E[(Z+W)^{2m}] E[(Z-W)^{2n}]`,
/// with equality iff `m == n` and `E[ZW] = 0`.
pub fn check_equal_variance_pair(m: u32, n: u32, r: u32, cov2: &CovarianceMatrix) -> Result<InequalityVerdict> {
    if r == 0 {
        return Err(Error::OutOfRange("equal variance pair check needs r >= 1".into()));
    }
    if cov2.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, actual: cov2.dim() });
    }
    let (s, t) = (cov2.variance(0), cov2.variance(1));
    if s != t {
        return Err(Error::UnequalVariances(s.to_string(), t.to_string()));
    }
    let c = cov2.get(0, 1);
    let (one, zero) = (int(1), int(0));
    let map = vec![
        vec![one.clone(), zero.clone()],
        vec![zero, one.clone()],
        vec![one.clone(), one.clone()],
        vec![one.clone(), -one],
    ];
    let cov4 = cov2.transform(&map)?;
    let lhs = gaussian_moment(&cov4, &ev(&[2 * r, 2 * r, 2 * m, 2 * n]))?;
    let z_moment = univariate_even_moment(s, r)?;
    let rhs = half_binomial(m.min(n) + r, r)?
        * &z_moment
        * &z_moment
        * univariate_even_moment(cov4.variance(2), m)?
        * univariate_even_moment(cov4.variance(3), n)?;
    let params = Params::new().int("m", m).int("n", n).int("r", r).rat("var", s).rat("cov", c);
    Ok(InequalityVerdict::new("cor23", params, lhs, rhs, m == n && c.is_zero()))
}

fn three_dim(claim: &str, m: u32, n: u32, cov3: &CovarianceMatrix) -> Result<InequalityVerdict> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange(format!("{claim} needs m, n >= 1")));
    }
    if cov3.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, actual: cov3.dim() });
    }
    cov3.require_positive_diagonal()?;
    let lhs = gaussian_moment(cov3, &ev(&[2 * m, 2 * m, 2 * n]))?;
    let rhs = univariate_even_moment(cov3.variance(0), m)?
        * univariate_even_moment(cov3.variance(1), m)?
        * univariate_even_moment(cov3.variance(2), n)?;
    let mut params = Params::new().int("m", m);
    if claim != "main" {
        params = params.int("n", n);
    }
    Ok(InequalityVerdict::new(claim, params, lhs, rhs, cov3.is_diagonal()))
}

/// `E[X^{2m} Y^{2m} Z^{2n}] >= E[X^{2m}] E[Y^{2m}] E[Z^{2n}]`; equality exactly
/// for a diagonal covariance.
pub fn check_three_dim(m: u32, n: u32, cov3: &CovarianceMatrix) -> Result<InequalityVerdict> {
    three_dim("thm32", m, n, cov3)
}

/// The three-dimensional product inequality
/// `E[X^{2m} Y^{2m} Z^{2m}] >= E[X^{2m}] E[Y^{2m}] E[Z^{2m}]`, with equality iff
/// `X`, `Y`, `Z` are independent.
pub fn check_product_inequality(m: u32, cov3: &CovarianceMatrix) -> Result<InequalityVerdict> {
    three_dim("main", m, m, cov3)
}

/// The split product bound fails for `(U, U + 2V, U - 2V)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// `E[U^2 (U+2V)^2 (U-2V)^2]`
    #[serde(with = "rational::serde_str")]
    pub lhs: Rational,
    /// `E[U^2] E[(U+2V)^2 (U-2V)^2]`
    #[serde(with = "rational::serde_str")]
    pub rhs: Rational,
    /// `E[U^2] E[(U+2V)^2] E[(U-2V)^2]`, which the full product inequality
    /// still respects.
    #[serde(with = "rational::serde_str")]
    pub product_bound: Rational,
    pub refuted: bool,
}

pub fn split_bound_counterexample() -> Result<Counterexample> {
    let cov = CovarianceMatrix::from_ints(&[&[1, 1, 1], &[1, 5, -3], &[1, -3, 5]])?;
    let lhs = gaussian_moment(&cov, &ev(&[2, 2, 2]))?;
    let pair = cov.select(&[1, 2])?;
    let rhs = cov.variance(0) * gaussian_moment(&pair, &ev(&[2, 2]))?;
    let product_bound = cov.variance(0) * cov.variance(1) * cov.variance(2);
    let refuted = lhs < rhs;
    Ok(Counterexample { lhs, rhs, product_bound, refuted })
}
