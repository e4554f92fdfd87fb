#![no_main]

use libfuzzer_sys::fuzz_target;
use lieconf::parse::parse_weight;
use lieconf::AlgebraType;

// first line: algebra type, second line: weight
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let (ty, weight) = text.split_once('\n').unwrap_or(("A3", text));
    let Ok(ty) = ty.parse::<AlgebraType>() else {
        return;
    };
    if let Ok(w) = parse_weight(ty, weight) {
        assert_eq!(w.algebra(), ty);
        assert_eq!(w.coords().len(), ty.rank());
    }
});
