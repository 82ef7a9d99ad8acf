use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;

/// Lower-triangular Cholesky factor `A = G G^T`.
#[derive(Debug, Clone)]
pub struct Cholesky {
    n: usize,
    // row-major lower triangle, full n x n storage
    g: Vec<f64>,
}

impl Cholesky {
    pub fn factor(a: &SymmetricMatrix) -> Result<Self> {
        let n = a.n();
        let mut g = vec![0.0; n * n];
        for j in 0..n {
            let mut d = a.get(j, j);
            for k in 0..j {
                d -= g[j * n + k] * g[j * n + k];
            }
            if !(d > 0.0) {
                return Err(Error::NotPositiveDefinite { pivot: j, value: d });
            }
            let d = d.sqrt();
            g[j * n + j] = d;
            for i in j + 1..n {
                let mut s = a.get(i, j);
                for k in 0..j {
                    s -= g[i * n + k] * g[j * n + k];
                }
                g[i * n + j] = s / d;
            }
        }
        Ok(Cholesky { n, g })
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if b.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
        let g = &self.g;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= g[i * n + k] * y[k];
            }
            y[i] /= g[i * n + i];
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= g[k * n + i] * y[k];
            }
            y[i] /= g[i * n + i];
        }
        Ok(y)
    }
}

/// Solves `a x = b` for symmetric positive definite `a` by Cholesky factorization.
pub fn spd_solve(a: &SymmetricMatrix, b: &[f64]) -> Result<Vec<f64>> {
    Cholesky::factor(a)?.solve(b)
}

/// Determinant of `a` with the rows and columns in `removed` deleted.
/// The empty matrix has determinant 1.
pub fn principal_minor_det(a: &SymmetricMatrix, removed: &[usize]) -> f64 {
    let sub = a.without(removed);
    determinant(sub.to_rows())
}

/// Gaussian elimination with partial pivoting on a dense copy.
fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        for r in col + 1..n {
            let f = m[r][col] / p;
            if f == 0.0 {
                continue;
            }
            for c in col + 1..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}
