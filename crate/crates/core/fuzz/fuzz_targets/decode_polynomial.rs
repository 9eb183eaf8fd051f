#![no_main]

use birack::invariant::BirackPolynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(p) = serde_json::from_slice::<BirackPolynomial>(data) {
        let _ = p.to_string();
        let json = serde_json::to_vec(&p).unwrap();
        assert_eq!(serde_json::from_slice::<BirackPolynomial>(&json).unwrap(), p);
    }
});
