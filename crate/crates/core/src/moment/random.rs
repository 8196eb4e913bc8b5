use num_traits::Zero;

use super::covariance::CovarianceMatrix;
use crate::exact::rational::{self, Rational};
use crate::exact::SeededGenerator;

/// Draws `A` with entries uniform on `{-q, ..., q}` and returns `A A^T`,
/// redrawing until no diagonal entry is zero.
pub fn random_covariance(gen: &mut SeededGenerator, d: usize, q: i64) -> CovarianceMatrix {
    assert!(d >= 1 && q >= 1, "need d >= 1 and q >= 1");
    loop {
        let a: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| gen.next_in_range(-q, q)).collect())
            .collect();
        let gram: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| rational::int((0..d).map(|k| a[i][k] * a[j][k]).sum()))
                    .collect()
            })
            .collect();
        if (0..d).any(|i| gram[i][i].is_zero()) {
            continue;
        }
        return CovarianceMatrix::new(gram).expect("Gram matrices are PSD");
    }
}

/// Diagonal covariance with entries `a_i^2`, `a_i` uniform on
/// `{-q, ..., q} \ {0}`.
pub fn random_diagonal_covariance(gen: &mut SeededGenerator, d: usize, q: i64) -> CovarianceMatrix {
    assert!(d >= 1 && q >= 1, "need d >= 1 and q >= 1");
    let vars: Vec<Rational> = (0..d)
        .map(|_| {
            let a = loop {
                let a = gen.next_in_range(-q, q);
                if a != 0 {
                    break a;
                }
            };
            rational::int(a * a)
        })
        .collect();
    CovarianceMatrix::diagonal(&vars).expect("nonnegative diagonal is PSD")
}
