#![no_main]

use libfuzzer_sys::fuzz_target;

use hdsets::groups::build_group;
use hdsets::presentation::parse_presentation;

// End-to-end: grammar plus coset enumeration. The small cap keeps runs
// fast; the enumerator must terminate (or error) on every presentation.
fuzz_target!(|data: &[u8]| {
    if data.len() > 256 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(p) = parse_presentation(s) {
            if let Ok(g) = build_group(&p, 48) {
                assert!(g.order() <= 48);
                // the identity is index 0 and inverses close
                for e in g.elements() {
                    assert_eq!(g.mul(e, g.inv(e)), g.identity());
                }
            }
        }
    }
});
