#![no_main]

use libfuzzer_sys::fuzz_target;
use nkt_core::graph6;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = graph6::decode(data) {
        let text = graph6::encode(&g);
        let body = data.strip_prefix(graph6::HEADER).unwrap_or(data);
        assert_eq!(text.as_bytes(), body);
    }
});
