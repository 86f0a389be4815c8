#![no_main]

use libfuzzer_sys::fuzz_target;
use unicyclic_wiener::cli::{wiener_record, wiener_records};

fuzz_target!(|data: &[u8]| {
    let _ = wiener_record(1, data);
    let _ = wiener_records(data);
});
