//! Distances and indices checked against an independent pseudoinverse built
//! by Gauss-Jordan inversion of the grounded Laplacian `L + J/n`.

use biharmonic::random::connected_suite;
use biharmonic::spectral::{
    biharmonic_index_spectral, biharmonic_spectral, kirchhoff_index, resistance_distance,
};
use biharmonic::{Family, Graph, SpectralCache};

fn dense_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let mut l = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        l[u][u] += 1.0;
        l[v][v] += 1.0;
        l[u][v] -= 1.0;
        l[v][u] -= 1.0;
    }
    l
}

fn invert(mut a: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let n = a.len();
    let mut inv: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, p);
        inv.swap(col, p);
        let d = a[col][col];
        for j in 0..n {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                for j in 0..n {
                    a[r][j] -= f * a[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
    }
    inv
}

fn oracle_pinv(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.n();
    let shift = 1.0 / n as f64;
    let grounded: Vec<Vec<f64>> = dense_laplacian(g)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x + shift).collect())
        .collect();
    invert(grounded)
        .into_iter()
        .map(|row| row.into_iter().map(|x| x - shift).collect())
        .collect()
}

fn square(a: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * a[k][j]).sum()).collect())
        .collect()
}

#[test]
fn pseudoinverse_and_distances_match_oracle() {
    for g in connected_suite(11, 40, 2, 20) {
        let n = g.n();
        let cache = SpectralCache::build(&g).unwrap();
        let p = oracle_pinv(&g);
        let p2 = square(&p);
        let mut trace = 0.0;
        let mut trace2 = 0.0;
        for u in 0..n {
            trace += p[u][u];
            trace2 += p2[u][u];
            for v in 0..n {
                assert!((cache.pinv().get(u, v) - p[u][v]).abs() < 1e-9);
                assert!((cache.pinv2().get(u, v) - p2[u][v]).abs() < 1e-9);
                let d2 = p2[u][u] + p2[v][v] - 2.0 * p2[u][v];
                let d = d2.max(0.0).sqrt();
                let got = biharmonic_spectral(&cache, u, v).unwrap();
                assert!((got - d).abs() < 1e-8 * d.max(1.0), "({u},{v}) {got} vs {d}");
                let r = p[u][u] + p[v][v] - 2.0 * p[u][v];
                assert!((resistance_distance(&cache, u, v).unwrap() - r).abs() < 1e-9);
            }
        }
        let nf = n as f64;
        assert!((biharmonic_index_spectral(&cache) - nf * trace2).abs() < 1e-8 * nf * trace2);
        assert!((kirchhoff_index(&cache) - nf * trace).abs() < 1e-8 * nf * trace);
    }
}

#[test]
fn path_on_three_vertices_by_hand() {
    // L^+ of P3 is (1/9) [[5,-1,-4],[-1,2,-1],[-4,-1,5]]
    let g = Graph::generate(Family::Path(3)).unwrap();
    let cache = SpectralCache::build(&g).unwrap();
    let expected = [[5.0, -1.0, -4.0], [-1.0, 2.0, -1.0], [-4.0, -1.0, 5.0]];
    for u in 0..3 {
        for v in 0..3 {
            assert!((cache.pinv().get(u, v) - expected[u][v] / 9.0).abs() < 1e-12);
        }
    }
    let d01 = biharmonic_spectral(&cache, 0, 1).unwrap();
    let d12 = biharmonic_spectral(&cache, 1, 2).unwrap();
    assert!((d01 - d12).abs() < 1e-12);
    assert!((d01 * d01 - 2.0 / 3.0).abs() < 1e-12);
    assert!((resistance_distance(&cache, 0, 2).unwrap() - 2.0).abs() < 1e-12);
}

#[test]
fn star_resistances_and_distances() {
    // K_{1,3}: leaves at resistance 2, spectrum {0, 1, 1, 4}
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let cache = SpectralCache::build(&g).unwrap();
    assert!((resistance_distance(&cache, 1, 2).unwrap() - 2.0).abs() < 1e-12);
    assert!((resistance_distance(&cache, 0, 3).unwrap() - 1.0).abs() < 1e-12);
    assert!((kirchhoff_index(&cache) - 4.0 * (1.0 + 1.0 + 0.25)).abs() < 1e-12);
    assert!((biharmonic_index_spectral(&cache) - 4.0 * (1.0 + 1.0 + 1.0 / 16.0)).abs() < 1e-12);
    let p = oracle_pinv(&g);
    let p2 = square(&p);
    let d2 = p2[1][1] + p2[2][2] - 2.0 * p2[1][2];
    assert!((biharmonic_spectral(&cache, 1, 2).unwrap() - d2.sqrt()).abs() < 1e-12);
}
