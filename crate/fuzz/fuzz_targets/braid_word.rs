#![no_main]

use aww_core::quantum::BraidWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<BraidWord>() {
        let back: BraidWord = w.to_string().parse().expect("display form parses");
        assert_eq!(back, w);
        assert_eq!(w.inverse().inverse(), w);
    }
});
