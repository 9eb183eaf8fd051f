#![no_main]

use birack::algebra::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(p) = Permutation::parse_cycles(text, usize::from(n % 65)) {
        assert!(p.then(&p.inverse()).is_identity());
    }
});
