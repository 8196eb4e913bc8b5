use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Outcome of an exact semidefiniteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PsdCertificate {
    /// `P A P^T = L D L^T` with `D >= 0`; `pivots` lists `(index, d)` in
    /// elimination order for the nonzero part of `D`.
    Psd { pivots: Vec<(usize, Rational)>, rank: usize },
    /// The principal minor on `indices` equals `minor < 0`.
    Indefinite { indices: Vec<usize>, minor: Rational },
}

impl PsdCertificate {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdCertificate::Psd { .. })
    }
}

/// Symmetric LDL^T elimination with diagonal pivoting over the rationals.
///
/// At every step the Schur complement of the pivots chosen so far is
/// inspected. A negative diagonal entry, or an all-zero diagonal with a nonzero
/// off-diagonal entry, yields a principal minor of the original matrix that is
/// negative; the certificate reports it.
pub fn is_psd(matrix: &[Vec<Rational>]) -> Result<PsdCertificate> {
    let d = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != d {
            return Err(Error::DimensionMismatch { expected: d, actual: row.len() });
        }
        for j in 0..i {
            if row[j] != matrix[j][i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }

    let mut s: Vec<Vec<Rational>> = matrix.to_vec();
    let mut remaining: Vec<usize> = (0..d).collect();
    let mut pivots: Vec<(usize, Rational)> = Vec::new();
    let pivot_product =
        |pivots: &[(usize, Rational)]| pivots.iter().fold(Rational::one(), |acc, (_, p)| acc * p);
    let with = |pivots: &[(usize, Rational)], extra: &[usize]| {
        let mut idx: Vec<usize> = pivots.iter().map(|(i, _)| *i).chain(extra.iter().copied()).collect();
        idx.sort_unstable();
        idx
    };

    while !remaining.is_empty() {
        if let Some(&k) = remaining.iter().find(|&&k| s[k][k] < Rational::zero()) {
            return Ok(PsdCertificate::Indefinite {
                indices: with(&pivots, &[k]),
                minor: pivot_product(&pivots) * &s[k][k],
            });
        }
        let Some(pos) = remaining.iter().position(|&k| !s[k][k].is_zero()) else {
            // all remaining diagonals vanish: the rest must be identically zero
            for (a, &i) in remaining.iter().enumerate() {
                for &j in &remaining[a + 1..] {
                    if !s[i][j].is_zero() {
                        return Ok(PsdCertificate::Indefinite {
                            indices: with(&pivots, &[i, j]),
                            minor: -(pivot_product(&pivots) * &s[i][j] * &s[i][j]),
                        });
                    }
                }
            }
            break;
        };
        let p = remaining.remove(pos);
        let piv = s[p][p].clone();
        for &i in &remaining {
            if s[i][p].is_zero() {
                continue;
            }
            let factor = &s[i][p] / &piv;
            for &j in &remaining {
                let delta = &factor * &s[p][j];
                s[i][j] -= delta;
            }
        }
        pivots.push((p, piv));
    }
    let rank = pivots.len();
    Ok(PsdCertificate::Psd { pivots, rank })
}
