//! Fuzzes the algebra JSON parser: any accepted input must survive a
//! serialize → parse round trip and reserialize to the same canonical bytes.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(alg) = crosscap_core::codec::parse_algebra(text) {
        let canonical = crosscap_core::codec::serialize_algebra(&alg);
        let back = crosscap_core::codec::parse_algebra(&canonical)
            .expect("canonical serialization must parse");
        assert_eq!(back, alg, "round trip changed the algebra");
        assert_eq!(
            crosscap_core::codec::serialize_algebra(&back),
            canonical,
            "canonical serialization is not a fixed point"
        );
    }
});
