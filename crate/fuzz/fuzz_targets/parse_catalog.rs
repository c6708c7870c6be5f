#![no_main]

use libfuzzer_sys::fuzz_target;

// The loader builds every declared group, so this exercises the whole
// pipeline: catalog grammar, presentation parser, coset enumeration with
// its caps, and the row cross-checks.
fuzz_target!(|data: &[u8]| {
    if data.len() > 8192 {
        return;
    }
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = hdsets::catalog::load_catalog(s);
    }
});
