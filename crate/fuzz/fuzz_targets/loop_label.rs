#![no_main]

use aww_core::label::LoopLabel;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for prefix in ['A', 'Q'] {
        if let Ok(l) = LoopLabel::parse_with_prefix(s, prefix) {
            assert_eq!(LoopLabel::parse_with_prefix(&l.display(prefix), prefix).unwrap(), l);
        }
    }
});
