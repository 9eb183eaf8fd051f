#![no_main]

use birack::braid::parse_braid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(word) = parse_braid(text, None) {
        // Display output must parse back to the same word.
        let again = parse_braid(&word.to_string(), Some(word.strands())).expect("display round trip");
        assert_eq!(again, word);
        assert_eq!(word.inverse().inverse(), word);
    }
});
