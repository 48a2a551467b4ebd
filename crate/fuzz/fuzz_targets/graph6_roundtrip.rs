#![no_main]

use libfuzzer_sys::fuzz_target;
use nkt_core::{graph6, Graph};

// Builds a graph from raw bytes, one edge bit per byte bit, and checks that
// encoding then decoding gives it back.
fuzz_target!(|data: &[u8]| {
    let Some((&first, bits)) = data.split_first() else {
        return;
    };
    let n = usize::from(first % 33);
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits.get(i / 8).is_some_and(|b| b >> (i % 8) & 1 == 1) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    let g = if n == 0 {
        Graph::empty(0)
    } else {
        Graph::from_edges(n, &edges)
    }
    .unwrap();
    let text = graph6::encode(&g);
    assert_eq!(graph6::decode_str(&text).unwrap(), g);
});
