#![no_main]

use libfuzzer_sys::fuzz_target;
use lieconf::AlgebraType;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(ty) = text.parse::<AlgebraType>() {
        assert_eq!(ty.to_string().parse::<AlgebraType>().unwrap(), ty);
    }
});
