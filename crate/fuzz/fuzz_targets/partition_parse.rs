#![no_main]

use libfuzzer_sys::fuzz_target;
use nkt_core::CliqueUnion;

fuzz_target!(|text: &str| {
    if let Ok(u) = text.parse::<CliqueUnion>() {
        let again: CliqueUnion = u.to_string().parse().unwrap();
        assert_eq!(again, u);
        assert!(u.parts().windows(2).all(|w| w[0] >= w[1]));
    }
});
