#![no_main]

use aww_core::label::parse_product;
use aww_core::skein::SkeinElement;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(ls) = parse_product(s, 'Q') {
        let text = ls.iter().map(|l| l.display('Q')).collect::<Vec<_>>().join("*");
        assert_eq!(parse_product(&text, 'Q').unwrap(), ls);
    }
    let _ = SkeinElement::parse(s, 3);
    let _ = SkeinElement::parse(s, 4);
});
