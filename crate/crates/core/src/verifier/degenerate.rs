use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::moment::{gaussian_moment, univariate_even_moment, CovarianceMatrix, ExponentVector};
use crate::special::binomial;
use crate::verdict::{InequalityVerdict, Params};

/// A rank-deficient triple `(X, Y, Z) = (U + aZ, U + bZ, Z)` with `E[UZ] = 0`,
/// `E[U^2] = sigma2`, `E[Z^2] = 1` and `a - b = 1`, so that `Z = X - Y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerateTriple {
    #[serde(with = "rational::serde_str")]
    pub a: Rational,
    #[serde(with = "rational::serde_str")]
    pub b: Rational,
    #[serde(with = "rational::serde_str")]
    pub sigma2: Rational,
}

impl DegenerateTriple {
    pub fn new(a: Rational, b: Rational, sigma2: Rational) -> Result<Self> {
        if &a - &b != Rational::one() {
            return Err(Error::InvalidTriple(format!("a - b must be 1, got a={a}, b={b}")));
        }
        if sigma2 < Rational::zero() {
            return Err(Error::InvalidTriple(format!("sigma2 must be >= 0, got {sigma2}")));
        }
        let t = Self { a, b, sigma2 };
        if t.sigma2.is_zero() && (t.a.is_zero() || t.b.is_zero()) {
            return Err(Error::InvalidTriple("X or Y vanishes identically".into()));
        }
        Ok(t)
    }

    /// The triple with `b = a - 1`.
    pub fn from_a(a: Rational, sigma2: Rational) -> Result<Self> {
        let b = &a - Rational::one();
        Self::new(a, b, sigma2)
    }

    pub fn covariance(&self) -> CovarianceMatrix {
        let (a, b, s) = (&self.a, &self.b, &self.sigma2);
        CovarianceMatrix::new(vec![
            vec![s + a * a, s + a * b, a.clone()],
            vec![s + a * b, s + b * b, b.clone()],
            vec![a.clone(), b.clone(), Rational::one()],
        ])
        .expect("Gram matrix of (U, Z) under a linear map")
    }
}

/// `E[X^{2m} Y^{2m} Z^{2n}] > E[X^{2m}] E[Y^{2m}] E[Z^{2n}]` for a degenerate
/// triple. The inequality is strict, so the equality condition is never met.
pub fn check_degenerate_triple(m: u32, n: u32, triple: &DegenerateTriple) -> Result<InequalityVerdict> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("degenerate triple check needs m, n >= 1".into()));
    }
    let cov = triple.covariance();
    let lhs = gaussian_moment(&cov, &ExponentVector::new(vec![2 * m, 2 * m, 2 * n]))?;
    let rhs = univariate_even_moment(cov.variance(0), m)?
        * univariate_even_moment(cov.variance(1), m)?
        * univariate_even_moment(cov.variance(2), n)?;
    let params = Params::new()
        .int("m", m)
        .int("n", n)
        .rat("a", &triple.a)
        .rat("b", &triple.b)
        .rat("sigma2", &triple.sigma2);
    Ok(InequalityVerdict::new("lemma31", params, lhs, rhs, false))
}

/// `Z = Z0 + Z1` with `Z0 = alpha X + beta Y` the projection of `Z` onto
/// `(X, Y)` and `Z1` orthogonal to both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegressionSplit {
    #[serde(with = "rational::serde_str")]
    pub alpha: Rational,
    #[serde(with = "rational::serde_str")]
    pub beta: Rational,
    #[serde(with = "rational::serde_str")]
    pub var_z1: Rational,
    /// Set when the `(X, Y)` block was singular and a smaller system was solved.
    pub fallback: bool,
    #[serde(skip)]
    cov: Vec<Vec<Rational>>,
}

impl RegressionSplit {
    pub fn var_z0(&self) -> Rational {
        let c = &self.cov;
        let (a, b) = (&self.alpha, &self.beta);
        a * a * &c[0][0] + Rational::from_integer(2.into()) * a * b * &c[0][1] + b * b * &c[1][1]
    }

    /// `E[Z1 X]` and `E[Z1 Y]`.
    pub fn residual_covariances(&self) -> (Rational, Rational) {
        let c = &self.cov;
        let (a, b) = (&self.alpha, &self.beta);
        (
            &c[0][2] - a * &c[0][0] - b * &c[0][1],
            &c[1][2] - a * &c[0][1] - b * &c[1][1],
        )
    }

    /// `E[Z^{2n}] = sum_i C(2n, 2i) E[Z0^{2n-2i}] E[Z1^{2i}]`.
    pub fn reconstruct_even_moment(&self, n: u32) -> Result<Rational> {
        let v0 = self.var_z0();
        let mut acc = Rational::zero();
        for i in 0..=n {
            let c = rational::from_big(binomial(u64::from(2 * n), u64::from(2 * i)));
            acc += c * univariate_even_moment(&v0, n - i)? * univariate_even_moment(&self.var_z1, i)?;
        }
        Ok(acc)
    }
}

fn split(cov3: &CovarianceMatrix, strict: bool) -> Result<RegressionSplit> {
    if cov3.dim() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, actual: cov3.dim() });
    }
    let c = cov3.entries();
    let (sxx, sxy, syy, sxz, syz) = (&c[0][0], &c[0][1], &c[1][1], &c[0][2], &c[1][2]);
    let det = sxx * syy - sxy * sxy;
    let zero = Rational::zero();
    let (alpha, beta, fallback) = if !det.is_zero() {
        ((syy * sxz - sxy * syz) / &det, (sxx * syz - sxy * sxz) / &det, false)
    } else if strict {
        return Err(Error::SingularSubBlock);
    } else if !sxx.is_zero() {
        (sxz / sxx, zero.clone(), true)
    } else if !syy.is_zero() {
        (zero.clone(), syz / syy, true)
    } else {
        (zero.clone(), zero.clone(), true)
    };
    let var_z1 = &c[2][2] - (&alpha * sxz + &beta * syz);
    Ok(RegressionSplit { alpha, beta, var_z1, fallback, cov: c.to_vec() })
}

/// Projects `Z` onto `(X, Y)`. A singular `(X, Y)` block is reduced to
/// whichever of `X`, `Y` has positive variance, and `fallback` is set.
pub fn regression_split(cov3: &CovarianceMatrix) -> Result<RegressionSplit> {
    split(cov3, false)
}

/// Like [`regression_split`] but fails with [`Error::SingularSubBlock`] on a
/// singular `(X, Y)` block.
pub fn regression_split_strict(cov3: &CovarianceMatrix) -> Result<RegressionSplit> {
    split(cov3, true)
}
