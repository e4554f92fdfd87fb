#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(catalog) = lieconf::embed::load_catalog(text) {
        // whatever loads must survive a round trip
        let again = lieconf::embed::load_catalog(&catalog.to_json()).expect("re-load");
        assert_eq!(again, catalog);
    }
});
