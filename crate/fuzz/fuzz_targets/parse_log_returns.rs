#![no_main]

use deform_gsp::io::parse_log_returns;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        let _ = parse_log_returns(text);
    }
});
