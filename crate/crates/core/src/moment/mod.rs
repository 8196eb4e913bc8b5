//! Centered Gaussian vectors with rational covariance: validation, exact PSD
//! certification, the Isserlis/Wick moment engine and seeded random
//! covariances.

mod covariance;
mod engine;
#[doc(hidden)]
pub mod pairing_oracle;
mod psd;
mod random;

pub use covariance::{CovarianceMatrix, ExponentVector};
pub use engine::{gaussian_moment, univariate_even_moment};
pub use psd::{is_psd, PsdCertificate};
pub use random::{random_covariance, random_diagonal_covariance};
