#![no_main]

use libfuzzer_sys::fuzz_target;
use saacbr::FeatureSet;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let parsed = FeatureSet::parse_list(text);
    let joined = parsed.iter().collect::<Vec<_>>().join(",");
    assert_eq!(FeatureSet::parse_list(&joined), parsed);
    assert!(parsed.iter().all(|f| !f.is_empty() && !f.contains(',')));
});
