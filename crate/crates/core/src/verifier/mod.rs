//! The moment polynomials `G`, `H`, `B` in the variance ratio `gamma`, and the
//! exact inequality checks built on them and on the moment engine.

mod degenerate;
mod gamma;
mod inequalities;

pub use degenerate::{check_degenerate_triple, regression_split, regression_split_strict, DegenerateTriple, RegressionSplit};
pub use gamma::{
    build_gamma_polynomials, check_h_positivity, check_stationary_agreement, check_moment_hypergeometric_bridge, cross_check_bridge,
    bridge_polynomial_identity, bridge_sample_points, sample_grid, GammaPolynomialSet, StationaryAgreement,
};
pub use inequalities::{
    check_equal_variance_pair, check_product_inequality, check_independent_sum, check_difference_of_squares, check_three_dim, split_bound_counterexample, min_c, Counterexample,
    MinC,
};
