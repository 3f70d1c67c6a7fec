#![no_main]

use libfuzzer_sys::fuzz_target;
use saacbr::io::{parse_csv, to_csv, LoadOptions};

fuzz_target!(|data: &[u8]| {
    let options = LoadOptions {
        default_outcome: Some("−".into()),
        ..LoadOptions::default()
    };
    let Ok(loaded) = parse_csv(data, &options) else {
        return;
    };
    let text =
        to_csv(&loaded.casebase, &loaded.features).expect("loaded features are valid columns");
    let options = LoadOptions {
        complement: Some(loaded.casebase.outcomes().complement_outcome().clone()),
        ..options
    };
    let again = parse_csv(text.as_bytes(), &options).expect("written casebase parses");
    assert_eq!(again.casebase, loaded.casebase);
});
