#![no_main]

use libfuzzer_sys::fuzz_target;
use nkt_cli::Range;

fuzz_target!(|text: &str| {
    if let Ok(r) = text.parse::<Range>() {
        assert!(r.lo >= 1 && r.lo <= r.hi);
        assert_eq!(r.to_string().parse::<Range>().unwrap(), r);
    }
});
