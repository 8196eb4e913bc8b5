use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::psd::{is_psd, PsdCertificate};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};

/// Symmetric positive semidefinite matrix of rationals, the covariance of a
/// centered Gaussian vector. Construction certifies both properties exactly,
/// so every value of this type is valid.
///
/// Singular (rank-deficient) matrices are accepted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CovarianceMatrix {
    entries: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct CovarianceJson {
    dim: usize,
    entries: Vec<Vec<String>>,
}

impl CovarianceMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let d = entries.len();
        if d == 0 {
            return Err(Error::InvalidCovariance("empty matrix".into()));
        }
        if let Some(row) = entries.iter().find(|row| row.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, actual: row.len() });
        }
        match is_psd(&entries)? {
            PsdCertificate::Psd { .. } => Ok(CovarianceMatrix { entries }),
            PsdCertificate::Indefinite { indices, minor } => Err(Error::InvalidCovariance(format!(
                "not positive semidefinite: principal minor on {indices:?} is {minor}"
            ))),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|row| row.iter().map(|&x| rational::int(x)).collect())
                .collect(),
        )
    }

    pub fn diagonal(variances: &[Rational]) -> Result<Self> {
        let d = variances.len();
        Self::new(
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| if i == j { variances[i].clone() } else { Rational::zero() })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(d: usize) -> Self {
        Self::diagonal(&vec![Rational::one(); d]).expect("identity is PSD")
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn variance(&self, i: usize) -> &Rational {
        &self.entries[i][i]
    }

    /// Fails unless every coordinate has strictly positive variance.
    pub fn require_positive_diagonal(&self) -> Result<()> {
        match (0..self.dim()).find(|&i| self.variance(i) <= &Rational::zero()) {
            Some(i) => Err(Error::InvalidCovariance(format!("coordinate {i} has zero variance"))),
            None => Ok(()),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    /// Covariance of `T X` for a linear map `T` with `rows x dim` rational
    /// entries.
    pub fn transform(&self, map: &[Vec<Rational>]) -> Result<Self> {
        let d = self.dim();
        if let Some(row) = map.iter().find(|row| row.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, actual: row.len() });
        }
        let k = map.len();
        let mut out = vec![vec![Rational::zero(); k]; k];
        for a in 0..k {
            for b in a..k {
                let mut acc = Rational::zero();
                for i in 0..d {
                    if map[a][i].is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        acc += &map[a][i] * &self.entries[i][j] * &map[b][j];
                    }
                }
                out[b][a] = acc.clone();
                out[a][b] = acc;
            }
        }
        Self::new(out)
    }

    /// Covariance of the sub-vector with the given coordinates.
    pub fn select(&self, coords: &[usize]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|&i| coords.iter().map(|&j| self.entries[i][j].clone()).collect())
                .collect(),
        )
    }

    /// `{"dim": d, "entries": [["p/q", ...], ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CovarianceJson {
            dim: self.dim(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(rational::render).collect())
                .collect(),
        })
        .expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: CovarianceJson = serde_json::from_str(s)?;
        if raw.entries.len() != raw.dim {
            return Err(Error::DimensionMismatch { expected: raw.dim, actual: raw.entries.len() });
        }
        let entries = raw
            .entries
            .iter()
            .map(|row| row.iter().map(|x| rational::parse(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

/// Nonnegative exponents `(k_1, ..., k_d)` selecting `E[prod X_i^{k_i}]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    exponents: Vec<u32>,
}

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&k| u64::from(k)).sum()
    }

    /// Parses `"k1,k2,..."`.
    pub fn parse_list(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::OutOfRange(format!("bad exponent {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// `{"exponents": [k1, ..., kd]}`
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self::new(v)
    }
}
