//! Rank data for the twisted affine algebra of type A_{2l}^{(2)}.

use serde::Serialize;

use crate::error::{Error, Result};

/// Rank `ell`, the odd modulus `p = 2 ell + 1`, and the Gram matrix of the
/// normalized invariant form on the simple roots `α_0, ..., α_ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalParams {
    pub ell: usize,
    pub p: u32,
    gram: Vec<Vec<i64>>,
}

impl GlobalParams {
    pub fn new(ell: usize) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidRank(ell));
        }
        let n = ell + 1;
        let mut gram = vec![vec![0i64; n]; n];
        for (i, row) in gram.iter_mut().enumerate() {
            row[i] = match i {
                0 => 2,
                _ if i == ell => 8,
                _ => 4,
            };
        }
        for i in 0..ell {
            let off = if i + 1 == ell { -4 } else { -2 };
            gram[i][i + 1] = off;
            gram[i + 1][i] = off;
        }
        Ok(Self {
            ell,
            p: 2 * ell as u32 + 1,
            gram,
        })
    }

    /// `(α_i | α_j)`
    pub fn gram(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    pub fn gram_matrix(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// The index set `I = {0, ..., ell}`.
    pub fn i_set(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.ell
    }

    /// The colors `J = {0, ..., ell - 1}`.
    pub fn j_set(&self) -> std::ops::Range<usize> {
        0..self.ell
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i > self.ell {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.ell,
            });
        }
        Ok(())
    }

    pub fn check_color(&self, j: usize) -> Result<()> {
        if j >= self.ell {
            return Err(Error::InvalidColor {
                color: j,
                ell: self.ell,
            });
        }
        Ok(())
    }

    /// Coordinates of the null root `δ = 2α_0 + ... + 2α_{ell-1} + α_ell`.
    pub fn delta(&self) -> Vec<i64> {
        let mut d = vec![2; self.ell + 1];
        d[self.ell] = 1;
        d
    }
}
