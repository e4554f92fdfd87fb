#![no_main]

use libfuzzer_sys::fuzz_target;
use lieconf::number::{fmt_q, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = parse_rational(text) {
        assert_eq!(parse_rational(&fmt_q(&x)).unwrap(), x);
    }
});
