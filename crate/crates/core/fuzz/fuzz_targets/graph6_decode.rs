#![no_main]

use libfuzzer_sys::fuzz_target;
use unicyclic_wiener::graph6;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = graph6::decode_bytes(data) {
        let line = graph6::encode(&g);
        let back = graph6::decode(&line).expect("encoder output decodes");
        assert_eq!(back, g);
    }
});
