//! Exact scalars, dense polynomials and the portable random source shared by
//! every other module.

mod poly;
pub mod rational;
mod rng;

pub use poly::{isolate_root, RationalPolynomial};
pub use rational::Rational;
pub use rng::SeededGenerator;
