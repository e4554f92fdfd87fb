#![no_main]

use libfuzzer_sys::fuzz_target;
use lieconf::parse::parse_factor_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = parse_factor_spec(text) {
        let again = parse_factor_spec(&spec.notation()).expect("notation re-parses");
        assert_eq!(again.factors, spec.factors);
    }
});
