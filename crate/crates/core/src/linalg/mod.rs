//! Dense kernels for small symmetric matrices.

mod eigen;
mod factor;

use std::ops::Index;

use crate::error::{Error, Result};

pub use eigen::{eigendecompose, EigenDecomposition, MAX_SWEEPS};
pub use factor::{principal_minor_det, spd_solve, Cholesky};

/// Dense real symmetric matrix in row-major full storage.
///
/// Every mutation writes both `(i, j)` and `(j, i)`, so the stored entries
/// are exactly symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Evaluates `f(i, j)` for `i <= j` only and mirrors the result.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rejects inputs that are not square or not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(SymmetricMatrix {
            n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, value: f64) {
        let v = self.get(i, j) + value;
        self.set(i, j, v);
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self * other` for commuting symmetric factors (powers, or functions
    /// of the same matrix); the product is symmetrized from its upper triangle.
    pub fn mul_commuting(&self, other: &SymmetricMatrix) -> SymmetricMatrix {
        let n = self.n;
        SymmetricMatrix::from_fn(n, |i, j| {
            (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    /// Full (possibly non-symmetric) product as dense rows.
    pub fn mul_dense(&self, other: &SymmetricMatrix) -> Vec<Vec<f64>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.get(i, k) * other.get(k, j)).sum())
                    .collect()
            })
            .collect()
    }

    pub fn square(&self) -> SymmetricMatrix {
        self.mul_commuting(self)
    }

    /// `self + c * J` where `J` is the all-ones matrix.
    pub fn plus_constant(&self, c: f64) -> SymmetricMatrix {
        SymmetricMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x + c).collect(),
        }
    }

    /// Submatrix with the listed rows and columns deleted.
    pub fn without(&self, removed: &[usize]) -> SymmetricMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|i| !removed.contains(i)).collect();
        SymmetricMatrix::from_fn(keep.len(), |i, j| self.get(keep[i], keep[j]))
    }

    pub fn max_abs_diff(&self, other: &SymmetricMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}
