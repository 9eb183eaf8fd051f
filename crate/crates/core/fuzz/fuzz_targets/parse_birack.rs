#![no_main]

use birack::catalog::{parse_biracks, to_text};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(all) = parse_biracks(text) {
        let again = parse_biracks(&to_text(&all)).expect("serialized catalog parses");
        assert_eq!(again.len(), all.len());
        for b in &all {
            let _ = b.sub_biracks();
        }
    }
});
