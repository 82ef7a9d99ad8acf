use rayon::prelude::*;

use crate::error::Result;
use crate::graph::Graph;
use crate::linalg::principal_minor_det;
use crate::spectral::{biharmonic_spectral, SpectralCache};

/// `B(G) = n * sum_{i>=2} lambda_i^-2`.
pub fn biharmonic_index_spectral(cache: &SpectralCache) -> f64 {
    let eig = cache.eig();
    let sum: f64 = eig.values().iter().skip(1).map(|l| 1.0 / (l * l)).sum();
    cache.n() as f64 * sum
}

/// Half the sum of `d_B(u,v)^2` over ordered pairs, from `L^2+` entries.
pub fn biharmonic_index_pairwise(cache: &SpectralCache) -> f64 {
    let p = cache.pinv2();
    let n = cache.n();
    let mut sum = 0.0;
    for u in 0..n {
        for v in 0..n {
            sum += p.get(u, u) + p.get(v, v) - 2.0 * p.get(u, v);
        }
    }
    sum / 2.0
}

/// `Kf(G) = n * sum_{i>=2} lambda_i^-1`.
pub fn kirchhoff_index(cache: &SpectralCache) -> f64 {
    let sum: f64 = cache.eig().values().iter().skip(1).map(|l| 1.0 / l).sum();
    cache.n() as f64 * sum
}

/// Sum of resistance distances over unordered pairs.
pub fn kirchhoff_index_pairwise(cache: &SpectralCache) -> f64 {
    let n = cache.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| resistance_distance(cache, u, v).unwrap())
        .sum()
}

/// `L+_uu + L+_vv - 2 L+_uv`.
pub fn resistance_distance(cache: &SpectralCache, u: usize, v: usize) -> Result<f64> {
    cache.check_pair(u, v)?;
    if u == v {
        return Ok(0.0);
    }
    let p = cache.pinv();
    Ok(p.get(u, u) + p.get(v, v) - 2.0 * p.get(u, v))
}

/// All pairwise biharmonic distances. Rows are computed in parallel; each
/// entry depends only on its pair, so the result is schedule-independent.
pub fn distance_matrix(cache: &SpectralCache) -> Vec<Vec<f64>> {
    let n = cache.n();
    (0..n)
        .into_par_iter()
        .map(|u| {
            (0..n)
                .map(|v| biharmonic_spectral(cache, u, v).unwrap())
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpanningTreeCount {
    pub value: f64,
    /// The cofactor was within `1e-6` relative of an integer and was rounded.
    pub rounded: bool,
}

/// Spanning-tree count as the cofactor `det L(0|0)`.
pub fn spanning_tree_count(g: &Graph) -> SpanningTreeCount {
    let raw = principal_minor_det(&g.laplacian(), &[0]);
    let nearest = raw.round();
    if (raw - nearest).abs() <= 1e-6 * nearest.abs().max(1.0) {
        SpanningTreeCount {
            value: nearest.abs(),
            rounded: true,
        }
    } else {
        SpanningTreeCount {
            value: raw,
            rounded: false,
        }
    }
}

/// Counts spanning trees by testing every `(n-1)`-subset of edges for
/// acyclicity. Returns `None` when there are more than `limit` subsets.
pub fn spanning_trees_exhaustive(g: &Graph, limit: u64) -> Option<u64> {
    let n = g.n();
    if n <= 1 {
        return Some(1);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let k = n - 1;
    if edges.len() < k {
        return Some(0);
    }
    if binomial(edges.len() as u64, k as u64)? > limit {
        return None;
    }

    let mut count = 0;
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        if is_forest(n, chosen.iter().map(|&i| edges[i])) {
            count += 1;
        }
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Some(count);
            }
            i -= 1;
            if chosen[i] < edges.len() - (k - i) {
                break;
            }
        }
        chosen[i] += 1;
        for j in i + 1..k {
            chosen[j] = chosen[j - 1] + 1;
        }
    }
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

fn is_forest(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn cache(f: Family) -> SpectralCache {
        SpectralCache::build(&Graph::generate(f).unwrap()).unwrap()
    }

    fn close(a: f64, b: f64) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }

    #[test]
    fn biharmonic_index_values() {
        close(biharmonic_index_spectral(&cache(Family::Complete(4))), 0.75);
        close(biharmonic_index_spectral(&cache(Family::Path(3))), 10.0 / 3.0);
        close(biharmonic_index_spectral(&cache(Family::Complete(2))), 0.5);
        close(biharmonic_index_pairwise(&cache(Family::Path(3))), 10.0 / 3.0);
        close(biharmonic_index_pairwise(&cache(Family::Complete(4))), 0.75);
        assert_eq!(biharmonic_index_pairwise(&cache(Family::Path(1))), 0.0);
    }

    #[test]
    fn kirchhoff_values() {
        close(kirchhoff_index(&cache(Family::Complete(4))), 3.0);
        close(kirchhoff_index(&cache(Family::Path(3))), 4.0);
        close(kirchhoff_index(&cache(Family::Complete(2))), 1.0);
        close(kirchhoff_index_pairwise(&cache(Family::Path(3))), 4.0);
    }

    #[test]
    fn resistance_values() {
        let p3 = cache(Family::Path(3));
        close(resistance_distance(&p3, 0, 2).unwrap(), 2.0);
        assert_eq!(resistance_distance(&p3, 1, 1).unwrap(), 0.0);
        let k4 = cache(Family::Complete(4));
        close(resistance_distance(&k4, 1, 3).unwrap(), 0.5);
    }

    #[test]
    fn tree_counts() {
        let count = |f| spanning_tree_count(&Graph::generate(f).unwrap());
        assert_eq!(count(Family::Complete(4)), SpanningTreeCount { value: 16.0, rounded: true });
        assert_eq!(count(Family::K4Minus).value, 8.0);
        assert_eq!(count(Family::Path(3)).value, 1.0);
        assert_eq!(count(Family::Path(1)).value, 1.0);
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&two_k2).value, 0.0);
    }

    #[test]
    fn exhaustive_counts() {
        let k4 = Graph::generate(Family::Complete(4)).unwrap();
        assert_eq!(spanning_trees_exhaustive(&k4, 1000), Some(16));
        let c5 = Graph::generate(Family::Cycle(5)).unwrap();
        assert_eq!(spanning_trees_exhaustive(&c5, 1000), Some(5));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_trees_exhaustive(&two_k2, 1000), Some(0));
        assert_eq!(spanning_trees_exhaustive(&k4, 10), None);
    }

    #[test]
    fn matrix_is_symmetric_with_zero_diagonal() {
        let m = distance_matrix(&cache(Family::Wheel(6)));
        for u in 0..6 {
            assert_eq!(m[u][u], 0.0);
            for v in 0..6 {
                close(m[u][v], m[v][u]);
            }
        }
    }
}
