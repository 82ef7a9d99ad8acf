//! Closed-form biharmonic distances for graph families whose Laplacian
//! spectrum is known in advance: complete graphs, hypercubes, complements,
//! Cartesian products and Cayley graphs of finite abelian groups.

mod cayley;

use crate::error::{Error, Result};
use crate::linalg::EigenDecomposition;

pub use cayley::{cayley_distance, CharacterTable};

/// `sqrt(2) / n`: every nonzero Laplacian eigenvalue of `K_n` equals `n`.
pub fn complete_graph_distance(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewVertices { required: 2, n });
    }
    Ok(2f64.sqrt() / n as f64)
}

/// Which normalization of the hypercube character sum to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HypercubeFormula {
    /// Characters scaled to unit length: `d_B^2 = 2^-(d+1) * S`.
    #[default]
    Normalized,
    /// Characters used without normalization: `d_B^2 = S / 2`. Disagrees
    /// with the spectral distance for every `d >= 1` (e.g. gives 1 on
    /// `Q_1 = K_2` instead of `sqrt(2)/2`); kept for comparison only.
    Unnormalized,
}

/// Distance between two vertices of `Q_d` given as bit strings.
pub fn hypercube_distance(d: usize, u: &[u8], v: &[u8]) -> Result<f64> {
    hypercube_distance_with(HypercubeFormula::Normalized, d, u, v)
}

/// Evaluates
///
/// ```text
/// S = sum_{nonempty I} |I|^-2 (1 - (-1)^{sum_{i in I} (u_i + v_i)})
/// ```
///
/// A subset contributes `2 / |I|^2` exactly when it meets the set `D` of
/// differing coordinates in an odd number of positions, so the sum is
/// grouped by `j = |I ∩ D|` and `k = |I \ D|`.
pub fn hypercube_distance_with(
    formula: HypercubeFormula,
    d: usize,
    u: &[u8],
    v: &[u8],
) -> Result<f64> {
    for s in [u, v] {
        if s.len() != d {
            return Err(Error::BitLength {
                expected: d,
                found: s.len(),
            });
        }
        if let Some(&b) = s.iter().find(|&&b| b > 1) {
            return Err(Error::BitValue(b));
        }
    }
    let h = u.iter().zip(v).filter(|(a, b)| a != b).count();
    let mut sum = 0.0;
    for j in (1..=h).step_by(2) {
        for k in 0..=d - h {
            let size = (j + k) as f64;
            sum += binomial(h, j) * binomial(d - h, k) * 2.0 / (size * size);
        }
    }
    let squared = match formula {
        HypercubeFormula::Normalized => sum / 2f64.powi(d as i32 + 1),
        HypercubeFormula::Unnormalized => sum / 2.0,
    };
    Ok(squared.sqrt())
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Bits of a hypercube vertex index; entry `i` is bit `i` of `index`.
pub fn hypercube_vertex_bits(d: usize, index: usize) -> Vec<u8> {
    (0..d).map(|i| ((index >> i) & 1) as u8).collect()
}

/// Distance in the complement `G^c`, from the Laplacian spectrum of `G`.
///
/// `L(G^c) = nI - J - L(G)`, so each eigenvector of `L(G)` orthogonal to the
/// all-ones vector is an eigenvector of `L(G^c)` with eigenvalue
/// `n - lambda_k`. The sum runs over every index: the component of
/// `delta_u - delta_v` along the all-ones vector is zero, so including the
/// kernel of `L(G)` in full makes the result independent of which
/// orthonormal basis the eigensolver chose for it when `G` is disconnected.
pub fn complement_distance(eig: &EigenDecomposition, u: usize, v: usize) -> Result<f64> {
    let n = eig.n();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let lambda_max = eig.max_value();
    if n >= 2 && lambda_max >= n as f64 - 1e-9 {
        return Err(Error::ComplementDisconnected { lambda_max, n });
    }
    if u == v {
        return Ok(0.0);
    }
    let sum: f64 = (0..n)
        .map(|k| {
            let z = eig.vector(k);
            let diff = z[u] - z[v];
            let mu = n as f64 - eig.value(k);
            diff * diff / (mu * mu)
        })
        .sum();
    Ok(sum.sqrt())
}

/// Distance in `G_1 □ G_2` between `(u1, u2)` and `(v1, v2)`, from the
/// factors' spectra: eigenvalues `lambda_i + mu_j` with eigenvectors
/// `z_i ⊗ w_j`.
pub fn cartesian_distance(
    eig1: &EigenDecomposition,
    eig2: &EigenDecomposition,
    (u1, u2): (usize, usize),
    (v1, v2): (usize, usize),
) -> Result<f64> {
    for (eig, a, b) in [(eig1, u1, v1), (eig2, u2, v2)] {
        if eig.n() >= 2 && eig.value(1) <= eig.grouping_tolerance() {
            return Err(Error::Disconnected);
        }
        for x in [a, b] {
            if x >= eig.n() {
                return Err(Error::VertexOutOfRange { vertex: x, n: eig.n() });
            }
        }
    }
    let mut sum = 0.0;
    for i in 0..eig1.n() {
        let z = eig1.vector(i);
        for j in 0..eig2.n() {
            if i == 0 && j == 0 {
                continue;
            }
            let w = eig2.vector(j);
            let diff = z[u1] * w[u2] - z[v1] * w[v2];
            let lambda = eig1.value(i) + eig2.value(j);
            sum += diff * diff / (lambda * lambda);
        }
    }
    Ok(sum.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, Graph};
    use crate::linalg::eigendecompose;

    fn eig(g: &Graph) -> EigenDecomposition {
        eigendecompose(&g.laplacian()).unwrap()
    }

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn complete() {
        close(complete_graph_distance(2).unwrap(), 2f64.sqrt() / 2.0);
        close(complete_graph_distance(4).unwrap(), 2f64.sqrt() / 4.0);
        assert!(complete_graph_distance(1).is_err());
    }

    #[test]
    fn hypercube_small() {
        close(hypercube_distance(1, &[0], &[1]).unwrap(), 2f64.sqrt() / 2.0);
        close(hypercube_distance(2, &[0, 0], &[1, 1]).unwrap(), 2f64.sqrt() / 2.0);
        close(hypercube_distance(2, &[0, 0], &[0, 1]).unwrap(), 5f64.sqrt() / 4.0);
        close(
            hypercube_distance_with(HypercubeFormula::Unnormalized, 1, &[0], &[1]).unwrap(),
            1.0,
        );
        assert_eq!(hypercube_distance(3, &[0, 1, 1], &[0, 1, 1]).unwrap(), 0.0);
        assert!(hypercube_distance(2, &[0], &[1, 1]).is_err());
        assert_eq!(hypercube_distance(1, &[2], &[1]), Err(Error::BitValue(2)));
    }

    /// Literal sum over all nonempty subsets of coordinates.
    fn subset_sum(d: usize, u: &[u8], v: &[u8]) -> f64 {
        let mut s = 0.0;
        for mask in 1usize..(1 << d) {
            let size = mask.count_ones() as f64;
            let parity: u32 = (0..d)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| (u[i] + v[i]) as u32)
                .sum();
            let sign = if parity.is_multiple_of(2) { 1.0 } else { -1.0 };
            s += (1.0 - sign) / (size * size);
        }
        (s / 2f64.powi(d as i32 + 1)).sqrt()
    }

    #[test]
    fn hypercube_grouping_matches_subset_enumeration() {
        for d in 1..=7 {
            for x in 0..(1 << d) {
                let u = hypercube_vertex_bits(d, 0);
                let v = hypercube_vertex_bits(d, x);
                close(hypercube_distance(d, &u, &v).unwrap(), subset_sum(d, &u, &v));
            }
        }
    }

    #[test]
    fn complement_cases() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        close(complement_distance(&eig(&two_k2), 0, 1).unwrap(), 2f64.sqrt() / 2.0);
        let empty = Graph::empty(4);
        for (u, v) in [(0, 1), (1, 3), (2, 3)] {
            close(complement_distance(&eig(&empty), u, v).unwrap(), 2f64.sqrt() / 4.0);
        }
        let c4 = Graph::generate(Family::Cycle(4)).unwrap();
        assert!(matches!(
            complement_distance(&eig(&c4), 0, 1),
            Err(Error::ComplementDisconnected { .. })
        ));
    }

    #[test]
    fn cartesian_cases() {
        let k2 = eig(&Graph::generate(Family::Complete(2)).unwrap());
        close(cartesian_distance(&k2, &k2, (0, 0), (1, 1)).unwrap(), 2f64.sqrt() / 2.0);
        close(cartesian_distance(&k2, &k2, (0, 0), (0, 1)).unwrap(), 5f64.sqrt() / 4.0);
        let two_k2 = eig(&Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        assert_eq!(
            cartesian_distance(&k2, &two_k2, (0, 0), (1, 1)),
            Err(Error::Disconnected)
        );
    }
}
