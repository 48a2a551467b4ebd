#![no_main]

use libfuzzer_sys::fuzz_target;
use nkt_core::extremal::Constructor;

fuzz_target!(|text: &str| {
    let _ = Constructor::parse_memo(text);
});
