#![no_main]

use biharmonic::{Family, Graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let mut words = text.split_whitespace();
    let Some(name) = words.next() else {
        return;
    };
    let params: Vec<&str> = words.collect();
    let Ok(family) = Family::parse(name, &params) else {
        return;
    };
    family.validate().expect("parsed family must be valid");
    let small = match family {
        Family::Complete(n) | Family::Path(n) | Family::Cycle(n) | Family::Wheel(n) => n <= 256,
        Family::Hypercube(d) => d <= 8,
        Family::K4Minus => true,
    };
    if small {
        let g = Graph::generate(family).unwrap();
        assert!(g.is_connected() || g.n() == 0);
    }
});
