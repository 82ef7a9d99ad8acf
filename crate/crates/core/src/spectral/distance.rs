use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{principal_minor_det, Cholesky, SymmetricMatrix};
use crate::spectral::{spanning_tree_count, SpectralCache};

/// Radicands down to this negative value are rounding noise and clamp to 0.
const RADICAND_CLAMP: f64 = -1e-12;

fn clamped_sqrt(radicand: f64) -> f64 {
    if (RADICAND_CLAMP..0.0).contains(&radicand) {
        0.0
    } else {
        radicand.sqrt()
    }
}

/// `(sum_{k>=2} lambda_k^-2 (z_k(u) - z_k(v))^2)^(1/2)`.
pub fn biharmonic_spectral(cache: &SpectralCache, u: usize, v: usize) -> Result<f64> {
    cache.check_pair(u, v)?;
    if u == v {
        return Ok(0.0);
    }
    let eig = cache.eig();
    let sum: f64 = (1..eig.n())
        .map(|k| {
            let z = eig.vector(k);
            let diff = z[u] - z[v];
            diff * diff / (eig.value(k) * eig.value(k))
        })
        .sum();
    Ok(sum.sqrt())
}

/// `(L^2+_uu + L^2+_vv - 2 L^2+_uv)^(1/2)` read from the cached pseudoinverse.
pub fn biharmonic_pinv_entries(cache: &SpectralCache, u: usize, v: usize) -> Result<f64> {
    cache.check_pair(u, v)?;
    if u == v {
        return Ok(0.0);
    }
    let p = cache.pinv2();
    Ok(clamped_sqrt(p.get(u, u) + p.get(v, v) - 2.0 * p.get(u, v)))
}

/// Distance from a principal minor of `L^2` and the spanning-tree count:
///
/// ```text
/// d_B(u,v) = sqrt(det L^2(u,v|u,v)) / (sqrt(n) * tau(G))
/// ```
///
/// Holds for distinct vertices only.
#[derive(Debug, Clone)]
pub struct DeterminantMethod {
    n: usize,
    laplacian_sq: SymmetricMatrix,
    trees: f64,
}

impl DeterminantMethod {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(DeterminantMethod {
            n: g.n(),
            laplacian_sq: g.laplacian().square(),
            trees: spanning_tree_count(g).value,
        })
    }

    pub fn laplacian_sq(&self) -> &SymmetricMatrix {
        &self.laplacian_sq
    }

    pub fn spanning_trees(&self) -> f64 {
        self.trees
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let minor = principal_minor_det(&self.laplacian_sq, &[u, v]);
        Ok(clamped_sqrt(minor) / ((self.n as f64).sqrt() * self.trees))
    }
}

pub fn biharmonic_determinant(g: &Graph, u: usize, v: usize) -> Result<f64> {
    DeterminantMethod::new(g)?.distance(u, v)
}

/// Norm of the minimum-norm solution of `L x = delta_u - delta_v`.
///
/// Solves the nonsingular system `(L + J/n) x = delta_u - delta_v` instead;
/// `(L + J/n)^-1 = L+ + J/n` and `J` annihilates `delta_u - delta_v`, so the
/// solution is `L+ (delta_u - delta_v)`, the minimum-norm one.
#[derive(Debug, Clone)]
pub struct MinNormMethod {
    n: usize,
    factor: Cholesky,
}

impl MinNormMethod {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.n();
        let grounded = g.laplacian().plus_constant(1.0 / n as f64);
        Ok(MinNormMethod {
            n,
            factor: Cholesky::factor(&grounded)?,
        })
    }

    /// The minimum-norm solution itself.
    pub fn solution(&self, u: usize, v: usize) -> Result<Vec<f64>> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        let mut rhs = vec![0.0; self.n];
        rhs[u] += 1.0;
        rhs[v] -= 1.0;
        self.factor.solve(&rhs)
    }

    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        if u == v && u < self.n {
            return Ok(0.0);
        }
        let f = self.solution(u, v)?;
        Ok(f.iter().map(|x| x * x).sum::<f64>().sqrt())
    }
}

pub fn biharmonic_minnorm(g: &Graph, u: usize, v: usize) -> Result<f64> {
    MinNormMethod::new(g)?.distance(u, v)
}

/// One vertex pair evaluated by all four characterizations.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodReport {
    pub pair: (usize, usize),
    pub spectral: f64,
    pub pinv_entries: f64,
    pub determinant: f64,
    pub min_norm: f64,
    /// `(max - min) / max` over the four values.
    pub max_relative_spread: f64,
}

impl MethodReport {
    pub fn new(pair: (usize, usize), values: [f64; 4]) -> Self {
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        MethodReport {
            pair,
            spectral: values[0],
            pinv_entries: values[1],
            determinant: values[2],
            min_norm: values[3],
            max_relative_spread: (max - min) / max.max(1e-300),
        }
    }

    pub fn values(&self) -> [f64; 4] {
        [self.spectral, self.pinv_entries, self.determinant, self.min_norm]
    }
}

/// The four methods prepared once for a graph, for evaluating many pairs.
#[derive(Debug, Clone)]
pub struct MethodSuite {
    cache: SpectralCache,
    determinant: DeterminantMethod,
    min_norm: MinNormMethod,
}

impl MethodSuite {
    pub fn new(g: &Graph) -> Result<Self> {
        Ok(MethodSuite {
            cache: SpectralCache::build(g)?,
            determinant: DeterminantMethod::new(g)?,
            min_norm: MinNormMethod::new(g)?,
        })
    }

    pub fn cache(&self) -> &SpectralCache {
        &self.cache
    }

    pub fn determinant(&self) -> &DeterminantMethod {
        &self.determinant
    }

    pub fn report(&self, u: usize, v: usize) -> Result<MethodReport> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(MethodReport::new(
            (u, v),
            [
                biharmonic_spectral(&self.cache, u, v)?,
                biharmonic_pinv_entries(&self.cache, u, v)?,
                self.determinant.distance(u, v)?,
                self.min_norm.distance(u, v)?,
            ],
        ))
    }
}

pub fn all_methods(g: &Graph, u: usize, v: usize) -> Result<MethodReport> {
    MethodSuite::new(g)?.report(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn graph(f: Family) -> Graph {
        Graph::generate(f).unwrap()
    }

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn spectral_values() {
        let k4 = SpectralCache::build(&graph(Family::Complete(4))).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                let expected = if u == v { 0.0 } else { 2f64.sqrt() / 4.0 };
                close(biharmonic_spectral(&k4, u, v).unwrap(), expected);
            }
        }
        let p3 = SpectralCache::build(&graph(Family::Path(3))).unwrap();
        close(biharmonic_spectral(&p3, 0, 2).unwrap(), 2f64.sqrt());
        assert!(matches!(
            biharmonic_spectral(&p3, 0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn pinv_entry_values() {
        let k2 = SpectralCache::build(&graph(Family::Complete(2))).unwrap();
        close(biharmonic_pinv_entries(&k2, 0, 1).unwrap(), 2f64.sqrt() / 2.0);
        let p3 = SpectralCache::build(&graph(Family::Path(3))).unwrap();
        close(biharmonic_pinv_entries(&p3, 0, 1).unwrap(), (2.0f64 / 3.0).sqrt());
        assert_eq!(biharmonic_pinv_entries(&p3, 1, 1).unwrap(), 0.0);
    }

    #[test]
    fn determinant_values() {
        close(
            biharmonic_determinant(&graph(Family::Complete(2)), 0, 1).unwrap(),
            2f64.sqrt() / 2.0,
        );
        close(biharmonic_determinant(&graph(Family::Path(3)), 0, 2).unwrap(), 2f64.sqrt());
        close(
            biharmonic_determinant(&graph(Family::K4Minus), 0, 2).unwrap(),
            2f64.sqrt() / 4.0,
        );
        assert_eq!(
            biharmonic_determinant(&graph(Family::Path(3)), 1, 1),
            Err(Error::SameVertex(1))
        );
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(biharmonic_determinant(&two_k2, 0, 1), Err(Error::Disconnected));
    }

    #[test]
    fn minnorm_values() {
        let k2 = graph(Family::Complete(2));
        let f = MinNormMethod::new(&k2).unwrap().solution(0, 1).unwrap();
        close(f[0], 0.5);
        close(f[1], -0.5);
        close(biharmonic_minnorm(&k2, 0, 1).unwrap(), 2f64.sqrt() / 2.0);
        close(biharmonic_minnorm(&graph(Family::Wheel(5)), 1, 3).unwrap(), 2f64.sqrt() / 3.0);
        assert_eq!(biharmonic_minnorm(&graph(Family::Wheel(5)), 2, 2).unwrap(), 0.0);
    }

    #[test]
    fn min_norm_solution_is_orthogonal_to_kernel() {
        let g = graph(Family::Wheel(6));
        let f = MinNormMethod::new(&g).unwrap().solution(1, 4).unwrap();
        assert!(f.iter().sum::<f64>().abs() < 1e-12);
        let lf = g.laplacian().mul_vec(&f);
        let mut rhs = vec![0.0; 6];
        rhs[1] = 1.0;
        rhs[4] = -1.0;
        for (a, b) in lf.iter().zip(&rhs) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn all_four_agree() {
        let r = all_methods(&graph(Family::Complete(4)), 0, 1).unwrap();
        for x in r.values() {
            close(x, 2f64.sqrt() / 4.0);
        }
        assert!(r.max_relative_spread <= 1e-10);
        let r = all_methods(&graph(Family::Path(3)), 0, 2).unwrap();
        for x in r.values() {
            close(x, 2f64.sqrt());
        }
        assert!(r.max_relative_spread <= 1e-10);
        assert_eq!(all_methods(&graph(Family::Path(3)), 0, 0), Err(Error::SameVertex(0)));
    }

    #[test]
    fn spread_definition() {
        let r = MethodReport::new((0, 1), [1.0, 2.0, 4.0, 3.0]);
        assert_eq!(r.max_relative_spread, 0.75);
        assert_eq!(MethodReport::new((0, 1), [0.0; 4]).max_relative_spread, 0.0);
    }
}
