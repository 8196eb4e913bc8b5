//! Pochhammer symbols, double factorials, half-binomials and terminating
//! Gauss hypergeometric series with their transformation laws.

mod combinatorics;
mod hyper;

pub use combinatorics::{binomial, double_factorial_odd, factorial, half_binomial, pochhammer};
pub use hyper::{
    contiguous_check, hyp2f1_polynomial, hyp2f1_terminating, pfaff_check, pfaff_check_moment_form,
    ContiguousRelation, HypergeometricParams,
};
