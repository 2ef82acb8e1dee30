//! Fuzzes the ring and scalar parsers. The input is split at the first
//! newline into a ring description and a scalar literal; when both parse, the
//! formatted scalar must parse back to the same value.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Some((ring_text, scalar_text)) = text.split_once('\n') else { return };
    let Ok(ring) = ring_text.parse::<crosscap_core::RingDesc>() else {
        return;
    };
    if let Ok(scalar) = ring.parse_scalar(scalar_text) {
        let formatted = ring.format_scalar(&scalar);
        let back = ring
            .parse_scalar(&formatted)
            .expect("formatted scalar must parse");
        assert_eq!(back, scalar, "round trip changed the scalar");
        assert_eq!(
            ring.format_scalar(&back),
            formatted,
            "formatting is not a fixed point"
        );
    }
});
