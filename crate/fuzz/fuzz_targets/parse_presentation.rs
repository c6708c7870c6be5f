#![no_main]

use libfuzzer_sys::fuzz_target;

// Parsing must be total: any input either yields a presentation or a
// positioned error, never a panic.
fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = hdsets::presentation::parse_presentation(s);
    }
});
