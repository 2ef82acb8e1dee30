//! Fuzzes the surface-presentation parser. The first input byte selects the
//! label rank; the rest is parsed as the surface JSON. Accepted surfaces must
//! round-trip through the serializer.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&rank_byte, rest)) = data.split_first() else { return };
    let rank = rank_byte % 9;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(surface) = crosscap_core::codec::parse_surface(text, rank) {
        let canonical = crosscap_core::codec::serialize_surface(&surface);
        let back = crosscap_core::codec::parse_surface(&canonical, rank)
            .expect("canonical serialization must parse");
        assert_eq!(back, surface, "round trip changed the surface");
    }
});
