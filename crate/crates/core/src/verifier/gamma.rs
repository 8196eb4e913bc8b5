use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::{self, frac, half, int, Rational};
use crate::exact::{isolate_root, RationalPolynomial};
use crate::moment::{gaussian_moment, CovarianceMatrix, ExponentVector};
use crate::special::{binomial, hyp2f1_polynomial, hyp2f1_terminating, pochhammer, HypergeometricParams};
use crate::verdict::{IdentityVerdict, InequalityVerdict, Params};

/// `G(gamma) = E[U^{2m} V^{2n} (gamma (U^2 + V^2) - V^2)^{2r}]` for independent
/// standard normal `U`, `V`, together with
///
/// - `H = G - 2^{m+n+2r} (1/2)_m (1/2)_{n+r} (1/2)_r`, the excess over the
///   product bound, and
/// - `B = G / (2^{m+n+2r} (1/2)_m (1/2)_{n+2r})`, the hypergeometric
///   normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaPolynomialSet {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub g: RationalPolynomial,
    pub h: RationalPolynomial,
    pub b: RationalPolynomial,
}

/// `2^{m+n+2r} (1/2)_m (1/2)_{n+2r}`, the factor relating `G` and `B`.
pub(crate) fn b_scale(m: u32, n: u32, r: u32) -> Rational {
    rational::pow_u(&int(2), m + n + 2 * r) * pochhammer(&half(), m) * pochhammer(&half(), n + 2 * r)
}

/// `2^{m+n+2r} (1/2)_m (1/2)_{n+r} (1/2)_r`, the constant subtracted from `G`.
pub(crate) fn h_shift(m: u32, n: u32, r: u32) -> Rational {
    rational::pow_u(&int(2), m + n + 2 * r)
        * pochhammer(&half(), m)
        * pochhammer(&half(), n + r)
        * pochhammer(&half(), r)
}

/// Expands `(gamma U^2 + (gamma - 1) V^2)^{2r}` binomially and takes each
/// expectation with the moment engine on the identity covariance.
pub fn build_gamma_polynomials(m: u32, n: u32, r: u32) -> Result<GammaPolynomialSet> {
    if r == 0 {
        return Err(Error::OutOfRange("r must be >= 1".into()));
    }
    let id = CovarianceMatrix::identity(2);
    let x = RationalPolynomial::from_ints(&[0, 1]);
    let x_minus_one = RationalPolynomial::from_ints(&[-1, 1]);
    let mut g = RationalPolynomial::zero();
    for j in 0..=2 * r {
        let moment = gaussian_moment(&id, &ExponentVector::new(vec![2 * m + 2 * j, 2 * n + 4 * r - 2 * j]))?;
        let coeff = rational::from_big(binomial(u64::from(2 * r), u64::from(j))) * moment;
        let basis = &x.pow(j) * &x_minus_one.pow(2 * r - j);
        g = &g + &basis.scale(&coeff);
    }
    let h = &g - &RationalPolynomial::constant(h_shift(m, n, r));
    let b = g.scale(&b_scale(m, n, r).recip());
    Ok(GammaPolynomialSet { m, n, r, g, h, b })
}

fn bridge_params(m: u32, n: u32, r: u32) -> (Rational, Rational, Rational) {
    let (m, n, r) = (i64::from(m), i64::from(n), i64::from(r));
    (int(-2 * r), int(-m - n - 2 * r), half() - int(n + 2 * r))
}

/// `2r + 1` distinct points `k / (2r + 2)` in `(0, 1)`; enough to pin down a
/// polynomial of degree `2r`.
pub fn bridge_sample_points(r: u32) -> Vec<Rational> {
    let d = 2 * i64::from(r) + 2;
    (1..d).map(|k| frac(k, d)).collect()
}

/// Whether `G(gamma) = 2^{m+n+2r} (1/2)_m (1/2)_{n+2r} F(-2r, -m-n-2r, 1/2-n-2r; gamma)`
/// at every sample point. Each point must lie in `(0, 1)`.
pub fn cross_check_bridge(m: u32, n: u32, r: u32, gammas: &[Rational]) -> Result<bool> {
    Ok(check_bridge_at(m, n, r, gammas)?.iter().all(|v| v.holds))
}

fn check_bridge_at(m: u32, n: u32, r: u32, gammas: &[Rational]) -> Result<Vec<IdentityVerdict>> {
    let set = build_gamma_polynomials(m, n, r)?;
    let (a, b, c) = bridge_params(m, n, r);
    let scale = b_scale(m, n, r);
    gammas
        .iter()
        .map(|gamma| {
            if gamma <= &Rational::zero() || gamma >= &Rational::one() {
                return Err(Error::OutOfRange(format!("gamma = {gamma} not in (0, 1)")));
            }
            let f = hyp2f1_terminating(&HypergeometricParams::new(a.clone(), b.clone(), c.clone(), gamma.clone()))?;
            Ok(IdentityVerdict::new(
                "lemma29",
                Params::new().int("m", m).int("n", n).int("r", r).rat("gamma", gamma),
                set.g.eval(gamma),
                &scale * f,
            ))
        })
        .collect()
}

/// Point verdicts of the moment/hypergeometric bridge at
/// [`bridge_sample_points`].
pub fn check_moment_hypergeometric_bridge(m: u32, n: u32, r: u32) -> Result<Vec<IdentityVerdict>> {
    check_bridge_at(m, n, r, &bridge_sample_points(r))
}

/// The same bridge as a coefficient-list identity.
pub fn bridge_polynomial_identity(m: u32, n: u32, r: u32) -> Result<bool> {
    let set = build_gamma_polynomials(m, n, r)?;
    let (a, b, c) = bridge_params(m, n, r);
    Ok(set.g == hyp2f1_polynomial(&a, &b, &c)?.scale(&b_scale(m, n, r)))
}

/// `count` evenly spaced rationals `k / d` in `(0, 1)`. With `exclude_half`
/// the denominator is odd, so `1/2` never appears.
pub fn sample_grid(count: usize, exclude_half: bool) -> Vec<Rational> {
    let mut d = count as i64 + 1;
    if exclude_half && d % 2 == 0 {
        d += 1;
    }
    (1..=count as i64).map(|k| frac(k, d)).collect()
}

/// Symmetric case (`m == n`): `H(1/2) = 0` and `H(gamma) > 0` off `1/2`.
/// Asymmetric case (`m > n`): `H(gamma) > 0` throughout. Each sample also
/// records the convexity witness `H''(gamma) > 0`.
pub fn check_h_positivity(m: u32, n: u32, r: u32, sample_count: usize) -> Result<Vec<InequalityVerdict>> {
    if m < n {
        return Err(Error::OutOfRange(format!("need m >= n, got m = {m}, n = {n}")));
    }
    let set = build_gamma_polynomials(m, n, r)?;
    let h2 = set.h.derivative().derivative();
    let base = || Params::new().int("m", m).int("n", n).int("r", r);
    let mut out = Vec::new();
    if m == n {
        out.push(InequalityVerdict::new(
            "H_at_half",
            base().rat("gamma", &half()),
            set.h.eval(&half()),
            Rational::zero(),
            true,
        ));
    }
    for gamma in sample_grid(sample_count, m == n) {
        out.push(InequalityVerdict::new(
            "H_positive",
            base().rat("gamma", &gamma),
            set.h.eval(&gamma),
            Rational::zero(),
            false,
        ));
        out.push(InequalityVerdict::new(
            "H_convex",
            base().rat("gamma", &gamma),
            h2.eval(&gamma),
            Rational::zero(),
            false,
        ));
    }
    Ok(out)
}

/// Certificate that `B_{m+1}` and `B_m` agree at the stationary point of
/// `B_{m+1}` in `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StationaryAgreement {
    pub m: u32,
    pub n: u32,
    pub r: u32,
    /// Isolating interval of the root of `B_{m+1}'`.
    #[serde(with = "rational::serde_vec")]
    pub interval: Vec<Rational>,
    /// `D = B_{m+1} - B_m` at the two interval ends.
    #[serde(with = "rational::serde_vec")]
    pub difference_at_ends: Vec<Rational>,
    /// `max |D|` over the interval ends.
    #[serde(with = "rational::serde_str")]
    pub residual: Rational,
    /// `D` changes sign (or vanishes) on the interval.
    pub sign_change: bool,
    /// Sign changes of `B_{m+1}'` on the grid `k/64`; one is expected.
    pub grid_sign_changes: usize,
    /// For `m == n`: `B_{n+1}'(1/2) > 0`, which puts the stationary point
    /// below `1/2`.
    pub below_half: Option<bool>,
    pub holds: bool,
}

/// Isolates the root of `B_{m+1}'` in `(0, 1)` to width `width` by exact
/// bisection, then checks that `B_{m+1} - B_m` changes sign (or is zero) on
/// the isolating interval.
pub fn check_stationary_agreement(m: u32, n: u32, r: u32, width: &Rational) -> Result<StationaryAgreement> {
    let next = build_gamma_polynomials(m + 1, n, r)?;
    let here = build_gamma_polynomials(m, n, r)?;
    let db = next.b.derivative();
    let (lo, hi) = isolate_root(&db, &Rational::zero(), &Rational::one(), width).map_err(|e| match e {
        Error::SameSign { .. } => Error::NoSignChange("(0, 1)".into()),
        other => other,
    })?;
    let diff = &next.b - &here.b;
    let (d_lo, d_hi) = (diff.eval(&lo), diff.eval(&hi));
    let sign_change = rational::sign(&d_lo) * rational::sign(&d_hi) <= 0;
    let residual = rational::abs(&d_lo).max(rational::abs(&d_hi));

    let signs: Vec<i8> = (0..=64)
        .map(|k| rational::sign(&db.eval(&frac(k, 64))))
        .filter(|&s| s != 0)
        .collect();
    let grid_sign_changes = signs.windows(2).filter(|w| w[0] != w[1]).count();

    let below_half = (m == n).then(|| db.eval(&half()) > Rational::zero());
    let holds = sign_change && grid_sign_changes == 1 && below_half != Some(false);
    Ok(StationaryAgreement {
        m,
        n,
        r,
        interval: vec![lo, hi],
        difference_at_ends: vec![d_lo, d_hi],
        residual,
        sign_change,
        grid_sign_changes,
        below_half,
        holds,
    })
}
