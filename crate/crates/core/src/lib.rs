//! Exact computation of centered Gaussian moments and mechanical verification
//! of the identities and inequalities surrounding the three-dimensional
//! Gaussian product inequality
//!
//! `E[X^{2m} Y^{2m} Z^{2m}] >= E[X^{2m}] E[Y^{2m}] E[Z^{2m}]`.
//!
//! Every scalar is an arbitrary-precision rational; no floating point takes
//! part in any verdict.
//!
//! - [`exact`]: rationals, dense rational polynomials, exact-sign bisection and
//!   a splitmix64 generator.
//! - [`moment`]: covariance matrices, exact PSD certification and the
//!   Isserlis/Wick moment engine.
//! - [`special`]: Pochhammer symbols, half-binomials and terminating `2F1`
//!   with its Pfaff, contiguous and differentiation laws.
//! - [`identities`]: the combinatorial identity suite.
//! - [`verifier`]: the `G`/`H`/`B` polynomials in the variance ratio and the
//!   inequality checks built on them.

pub mod error;
pub mod exact;
pub mod identities;
pub mod moment;
pub mod special;
pub mod verdict;
pub mod verifier;

pub use error::{Error, Result};
pub use exact::{Rational, RationalPolynomial, SeededGenerator};
pub use moment::{gaussian_moment, CovarianceMatrix, ExponentVector};
pub use verdict::{IdentityVerdict, InequalityVerdict, Params};
