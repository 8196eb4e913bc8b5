use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};

/// Rising factorial `(alpha)_n = alpha (alpha + 1) ... (alpha + n - 1)`.
///
/// `(alpha)_0 = 1` for every `alpha`, including `alpha = 0`.
pub fn pochhammer(alpha: &Rational, n: u32) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (alpha + rational::int(i64::from(i))))
}

/// `(2n - 1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(n: u32) -> BigInt {
    (1..=u64::from(n)).fold(BigInt::one(), |acc, i| acc * BigInt::from(2 * i - 1))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=u64::from(n)).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(n, k)` by the multiplicative formula, exact at any size; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    // each partial product C(n - k + i, i) is an integer
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - k + i) / BigInt::from(i))
}

/// `(2n - 1)!! / ((2n - 2k - 1)!! (2k - 1)!!)`, the binomial with base one half.
pub fn half_binomial(n: u32, k: u32) -> Result<Rational> {
    if k > n {
        return Err(Error::OutOfRange(format!("half_binomial needs k <= n, got n = {n}, k = {k}")));
    }
    Ok(Rational::new(
        double_factorial_odd(n),
        double_factorial_odd(n - k) * double_factorial_odd(k),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, half, int};
    use num_traits::Zero;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&frac(1, 2), 2), frac(3, 4));
        assert!(pochhammer(&int(-3), 5).is_zero());
        assert_eq!(pochhammer(&int(0), 0), int(1));
        assert!(pochhammer(&int(0), 1).is_zero());
    }

    #[test]
    fn factorial_is_pochhammer_of_one() {
        for n in 0..15 {
            assert_eq!(rational::from_big(factorial(n)), pochhammer(&int(1), n));
        }
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial_odd(0), BigInt::from(1));
        assert_eq!(double_factorial_odd(3), BigInt::from(15));
        for n in 0..=30u32 {
            let via_pochhammer = rational::pow_u(&int(2), n) * pochhammer(&half(), n);
            assert_eq!(rational::from_big(double_factorial_odd(n)), via_pochhammer);
        }
    }

    #[test]
    fn half_binomial_anchors() {
        assert_eq!(half_binomial(4, 2).unwrap(), frac(35, 3));
        assert_eq!(half_binomial(6, 3).unwrap(), frac(231, 5));
        for n in 0..10 {
            assert_eq!(half_binomial(n, 0).unwrap(), int(1));
            assert_eq!(half_binomial(n, n).unwrap(), int(1));
        }
        assert!(matches!(half_binomial(2, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn half_binomial_alternative_forms() {
        // (1/2 + n - k)_k / (1/2)_k and (1/2)_n / ((1/2)_{n-k} (1/2)_k)
        for n in 0..=12u32 {
            for k in 0..=n {
                let hb = half_binomial(n, k).unwrap();
                let a = pochhammer(&(half() + int(i64::from(n - k))), k) / pochhammer(&half(), k);
                let b = pochhammer(&half(), n) / (pochhammer(&half(), n - k) * pochhammer(&half(), k));
                assert_eq!(hb, a);
                assert_eq!(hb, b);
            }
        }
    }

    #[test]
    fn half_binomial_symmetric_and_at_least_one() {
        for n in 0..=20u32 {
            for k in 0..=n {
                let hb = half_binomial(n, k).unwrap();
                assert_eq!(hb, half_binomial(n, n - k).unwrap());
                assert!(hb >= int(1));
            }
        }
    }

    #[test]
    fn half_binomial_monotone_in_k_and_r() {
        for k in 0..=12u32 {
            for r in 0..=12u32 {
                let here = half_binomial(k + r, r).unwrap();
                assert!(half_binomial(k + 1 + r, r).unwrap() >= here);
                assert!(half_binomial(k + r + 1, r + 1).unwrap() >= here);
                if k >= 1 && r >= 1 {
                    assert!(here >= int(3));
                }
            }
        }
        assert_eq!(half_binomial(2, 1).unwrap(), int(3));
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::from(1)];
        for n in 0..40u64 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v);
            }
            assert_eq!(binomial(n, n + 1), BigInt::from(0));
            let mut next = vec![BigInt::from(1); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }

    proptest! {
        #[test]
        fn pochhammer_splits(
            (num, den) in (-40i64..40, 1i64..12),
            m in 0u32..=10,
            n in 0u32..=10,
        ) {
            let a = frac(num, den);
            prop_assert_eq!(
                pochhammer(&a, m + n),
                pochhammer(&a, m) * pochhammer(&(&a + int(i64::from(m))), n)
            );
        }
    }
}
