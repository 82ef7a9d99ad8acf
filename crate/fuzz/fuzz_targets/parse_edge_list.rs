#![no_main]

use biharmonic::graph::{parse_edge_list, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_edge_list(data) {
        let text = write_edge_list(&g);
        let again = parse_edge_list(text.as_bytes()).expect("canonical output must parse");
        assert_eq!(g, again);
    }
});
