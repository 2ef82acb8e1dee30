//! Fuzzes the cobordism-word parser. The first input byte selects the label
//! rank; the rest is parsed as the word JSON. Accepted words must round-trip
//! through the serializer.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&rank_byte, rest)) = data.split_first() else { return };
    let rank = rank_byte % 9;
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(word) = crosscap_core::codec::parse_word(text, rank) {
        let canonical = crosscap_core::codec::serialize_word(&word);
        let back = crosscap_core::codec::parse_word(&canonical, rank)
            .expect("canonical serialization must parse");
        assert_eq!(back, word, "round trip changed the word");
    }
});
