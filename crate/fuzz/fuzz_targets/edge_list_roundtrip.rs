#![no_main]

use biharmonic::graph::{parse_edge_list, write_edge_list};
use biharmonic::Graph;
use libfuzzer_sys::fuzz_target;

// First byte picks n in 1..=64, each following byte pair is a candidate edge.
fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    let n = (first as usize % 64) + 1;
    let mut g = Graph::empty(n);
    for pair in rest.chunks_exact(2) {
        let (u, v) = (pair[0] as usize % n, pair[1] as usize % n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    let text = write_edge_list(&g);
    assert_eq!(parse_edge_list(text.as_bytes()).unwrap(), g);
});
