//! Brute-force Isserlis oracle: the sum over every perfect matching of the
//! multiset of factors of the product of paired covariances. Unmemoized and
//! exponential; meant for cross-checking [`super::gaussian_moment`] at small
//! total degree.

use num_traits::{One, Zero};

use super::covariance::{CovarianceMatrix, ExponentVector};
use crate::exact::Rational;

pub fn pairing_moment(cov: &CovarianceMatrix, k: &ExponentVector) -> Rational {
    let factors: Vec<usize> = k
        .exponents()
        .iter()
        .enumerate()
        .flat_map(|(i, &ki)| std::iter::repeat_n(i, ki as usize))
        .collect();
    if factors.len() % 2 == 1 {
        return Rational::zero();
    }
    sum_matchings(cov, &factors)
}

fn sum_matchings(cov: &CovarianceMatrix, factors: &[usize]) -> Rational {
    let Some((&first, rest)) = factors.split_first() else {
        return Rational::one();
    };
    let mut total = Rational::zero();
    for (pos, &partner) in rest.iter().enumerate() {
        let c = cov.get(first, partner);
        if c.is_zero() {
            continue;
        }
        let remaining: Vec<usize> = rest
            .iter()
            .enumerate()
            .filter(|&(p, _)| p != pos)
            .map(|(_, &f)| f)
            .collect();
        total += c * sum_matchings(cov, &remaining);
    }
    total
}
