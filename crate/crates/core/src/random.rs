//! Seeded random graphs for test suites and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Random recursive spanning tree over a shuffled vertex order, plus every
/// remaining pair independently with probability `extra`.
pub fn random_connected_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent).expect("tree edges are fresh");
    }
    for (u, v) in g.non_edges() {
        if rng.gen_bool(extra) {
            g.add_edge(u, v).expect("non-edge");
        }
    }
    g
}

/// Erdős–Rényi `G(n, p)`; may be disconnected.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh pair");
            }
        }
    }
    g
}

/// `count` connected graphs with `n` uniform in `min_n..=max_n` and an
/// extra-edge probability skewed towards sparse graphs.
pub fn connected_suite(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p: f64 = rng.gen::<f64>().powi(2);
            random_connected_graph(&mut rng, n, p)
        })
        .collect()
}
