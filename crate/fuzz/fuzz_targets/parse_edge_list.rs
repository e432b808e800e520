#![no_main]

use deform_gsp::graph::{parse_edge_list, Mode};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        // First byte of content steers the node count and mode so both
        // parser paths get coverage; parsing must never panic.
        let n = 1 + (data.first().copied().unwrap_or(0) as usize % 64);
        let _ = parse_edge_list(text, n, Mode::Nonnegative);
        let _ = parse_edge_list(text, n, Mode::Signed);
    }
});
