#![no_main]

use libfuzzer_sys::fuzz_target;
use lieconf::conformal::LevelSolution;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(k) = text.parse::<LevelSolution>() {
        assert_eq!(k.to_string().parse::<LevelSolution>().unwrap(), k);
    }
});
