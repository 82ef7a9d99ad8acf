use crate::error::{Error, Result};
use crate::linalg::SymmetricMatrix;

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Sweeping stops once the off-diagonal Frobenius norm falls to this
/// fraction of the input's Frobenius norm.
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Relative tolerance for grouping eigenvalues into eigenspaces.
pub const GROUPING_TOL: f64 = 1e-8;

/// Ascending eigenvalues with orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector paired with `values[k]`.
    vectors: Vec<Vec<f64>>,
    /// Maximal runs of indices whose eigenvalues are equal within tolerance.
    groups: Vec<std::ops::Range<usize>>,
}

impl EigenDecomposition {
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, k: usize) -> f64 {
        self.values[k]
    }

    pub fn vector(&self, k: usize) -> &[f64] {
        &self.vectors[k]
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Largest eigenvalue, or 0 for the empty matrix.
    pub fn max_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// Absolute grouping tolerance `1e-8 * max(1, lambda_max)`.
    pub fn grouping_tolerance(&self) -> f64 {
        GROUPING_TOL * self.max_value().abs().max(1.0)
    }

    pub fn groups(&self) -> &[std::ops::Range<usize>] {
        &self.groups
    }

    /// The eigenspace group containing index `k`.
    pub fn group_of(&self, k: usize) -> std::ops::Range<usize> {
        self.groups
            .iter()
            .find(|g| g.contains(&k))
            .cloned()
            .expect("every index belongs to a group")
    }

    /// `sum_k lambda_k z_k z_k^T`.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        self.spectral_sum(0, |lambda| lambda)
    }

    /// `sum_{k >= first} f(lambda_k) z_k z_k^T`.
    pub fn spectral_sum(&self, first: usize, f: impl Fn(f64) -> f64) -> SymmetricMatrix {
        let n = self.n();
        let weights: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        SymmetricMatrix::from_fn(n, |i, j| {
            (first..n)
                .map(|k| weights[k] * self.vectors[k][i] * self.vectors[k][j])
                .sum()
        })
    }
}

/// Cyclic Jacobi eigendecomposition.
///
/// Each sweep visits every off-diagonal pair `(p, q)` in row order and
/// applies the plane rotation that annihilates `a[p][q]`. Eigenvalues are
/// returned ascending; ties keep the order in which the rotations left them.
pub fn eigendecompose(a: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let n = a.n();
    let mut m: Vec<Vec<f64>> = a.to_rows();
    // rows of `v` are the eigenvectors being accumulated
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    let target = OFF_DIAGONAL_TOL * a.frobenius_norm();
    let off_norm = |m: &Vec<Vec<f64>>| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * m[i][j] * m[i][j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&m) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NotConverged { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut m, p, q, c, s);
                m[p][p] -= t * apq;
                m[q][q] += t * apq;
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for k in 0..n {
                    let (vp, vq) = (v[p][k], v[q][k]);
                    v[p][k] = c * vp - s * vq;
                    v[q][k] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    let values: Vec<f64> = order.iter().map(|&i| m[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order.into_iter().map(|i| std::mem::take(&mut v[i])).collect();

    let mut decomposition = EigenDecomposition {
        values,
        vectors,
        groups: Vec::new(),
    };
    let tol = decomposition.grouping_tolerance();
    let mut start = 0;
    for k in 1..=n {
        if k == n || decomposition.values[k] - decomposition.values[k - 1] > tol {
            decomposition.groups.push(start..k);
            start = k;
        }
    }
    Ok(decomposition)
}

/// Applies the off-diagonal part of the rotation in the `(p, q)` plane to
/// rows and columns `p`, `q` of `m` (the 2x2 diagonal block is updated by
/// the caller).
fn rotate(m: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let n = m.len();
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let (mkp, mkq) = (m[k][p], m[k][q]);
        let new_p = c * mkp - s * mkq;
        let new_q = s * mkp + c * mkq;
        m[k][p] = new_p;
        m[p][k] = new_p;
        m[k][q] = new_q;
        m[q][k] = new_q;
    }
}
