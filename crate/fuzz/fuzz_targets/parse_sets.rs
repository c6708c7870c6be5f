#![no_main]

use std::sync::OnceLock;

use libfuzzer_sys::fuzz_target;

use hdsets::groups::{build_group, FiniteGroup, DEFAULT_ORDER_CAP};
use hdsets::presentation::parse_presentation;

fn group() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| {
        let p = parse_presentation("<a,b,c: a^3=b^3=c^4=[a,b]=[a,c]=[b,c]=1>").unwrap();
        build_group(&p, DEFAULT_ORDER_CAP).unwrap()
    })
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let g = group();
        if let Ok(sets) = hdsets::designs::parse_sets(g, s) {
            for set in &sets {
                let rendered = hdsets::designs::render_set(g, set);
                let again = hdsets::designs::parse_sets(g, &rendered)
                    .expect("rendered set must reparse");
                assert_eq!(&again[0], set);
            }
        }
    }
});
