#![no_main]

use libfuzzer_sys::fuzz_target;
use unicyclic_wiener::graph6;

// Dense inputs near the size limit can be slow, so stay small.
fuzz_target!(|data: &[u8]| {
    let Ok(g) = graph6::decode_bytes(data) else {
        return;
    };
    if g.order() > 16 {
        return;
    }
    let form = g.canonical_form().expect("within the canonical limit");
    assert_eq!(form.graph().canonical_form().unwrap(), form);
});
