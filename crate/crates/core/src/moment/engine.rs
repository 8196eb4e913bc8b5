use std::collections::HashMap;

use num_traits::{One, Zero};

use super::covariance::{CovarianceMatrix, ExponentVector};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::special::double_factorial_odd;

/// Exact `E[prod X_i^{k_i}]` for a centered Gaussian vector with covariance
/// `cov`.
///
/// Uses Isserlis' recursion on the first coordinate `j` with `k_j > 0`:
///
/// ```text
/// E[k] = (k_j - 1) cov[j][j] E[k - 2 e_j] + sum_{i != j} k_i cov[j][i] E[k - e_j - e_i]
/// ```
///
/// memoized on the exponent vector for the duration of this call. Odd total
/// degree gives 0 and the empty product gives 1.
pub fn gaussian_moment(cov: &CovarianceMatrix, k: &ExponentVector) -> Result<Rational> {
    if cov.dim() != k.len() {
        return Err(Error::DimensionMismatch { expected: cov.dim(), actual: k.len() });
    }
    if k.total_degree() % 2 == 1 {
        return Ok(Rational::zero());
    }
    let mut memo = HashMap::new();
    let mut state = k.exponents().to_vec();
    Ok(moment_rec(cov, &mut state, &mut memo))
}

fn moment_rec(
    cov: &CovarianceMatrix,
    k: &mut Vec<u32>,
    memo: &mut HashMap<Vec<u32>, Rational>,
) -> Rational {
    let Some(j) = k.iter().position(|&e| e > 0) else {
        return Rational::one();
    };
    if let Some(v) = memo.get(k.as_slice()) {
        return v.clone();
    }
    let key = k.clone();
    let mut acc = Rational::zero();

    k[j] -= 1;
    if k[j] > 0 && !cov.get(j, j).is_zero() {
        let mult = rational::int(i64::from(k[j]));
        k[j] -= 1;
        acc += mult * cov.get(j, j) * moment_rec(cov, k, memo);
        k[j] += 1;
    }
    for i in 0..k.len() {
        if i == j || k[i] == 0 || cov.get(j, i).is_zero() {
            continue;
        }
        let mult = rational::int(i64::from(k[i]));
        k[i] -= 1;
        acc += mult * cov.get(j, i) * moment_rec(cov, k, memo);
        k[i] += 1;
    }
    k[j] += 1;

    memo.insert(key, acc.clone());
    acc
}

/// `(2m - 1)!! variance^m`, the `2m`-th moment of `N(0, variance)`.
pub fn univariate_even_moment(variance: &Rational, m: u32) -> Result<Rational> {
    if variance < &Rational::zero() {
        return Err(Error::OutOfRange(format!("negative variance {variance}")));
    }
    Ok(rational::from_big(double_factorial_odd(m)) * rational::pow_u(variance, m))
}
