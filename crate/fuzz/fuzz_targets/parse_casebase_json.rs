#![no_main]

use libfuzzer_sys::fuzz_target;
use saacbr::io::{export_graph, parse_json, CasebaseDocument, LoadOptions, Stage};
use saacbr::{predict, Characterisation, FeatureSet, ModelConfig};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(loaded) = parse_json(text, &LoadOptions::default()) else {
        return;
    };

    // serialized form must load back to the same casebase
    let json = CasebaseDocument::from_casebase(&loaded.casebase, &loaded.features).to_json();
    let again = parse_json(&json, &LoadOptions::default()).expect("re-serialized casebase loads");
    assert_eq!(again.casebase, loaded.casebase);

    // mining is cubic in the casebase size
    if loaded.casebase.len() > 48 {
        return;
    }
    let x_new: FeatureSet = loaded.features.iter().cloned().collect();
    for config in [
        ModelConfig::aacbr(),
        ModelConfig::saacbr().with_secondary_attacks(),
    ] {
        let p = predict(&loaded.casebase, &config, &x_new).expect("valid casebase predicts");
        assert_eq!(
            p.default_accepted,
            p.grounded.contains(p.framework.default_argument())
        );
        if config.mode == saacbr::Mode::Saacbr && loaded.casebase.default_is_least() {
            assert!(p.spikes.is_empty());
        }
        let _ = export_graph(&p, Stage::Bipolar);
        let _ = export_graph(&p, Stage::Translated);
    }
    let _ = x_new.is_irrelevant(&loaded.casebase.default_case().characterisation);
});
