#![no_main]

use aww_core::label::parse_dims;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_dims(s) {
        assert!(d.iter().all(|&x| (1..=64).contains(&x)));
        let text = d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(parse_dims(&text).unwrap(), d);
    }
});
