#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let gens = ['a', 'b', 'c', 'd'];
        if let Ok(w) = hdsets::presentation::parse_word(s, &gens) {
            // accepted words round-trip through their rendering
            let rendered = w.render(&gens);
            let again = hdsets::presentation::parse_word(&rendered, &gens)
                .expect("rendered word must reparse");
            assert_eq!(w, again);
        }
    }
});
