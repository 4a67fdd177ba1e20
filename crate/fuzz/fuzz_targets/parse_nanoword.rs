#![no_main]

use libfuzzer_sys::fuzz_target;
use vstring::Nanoword;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = text.parse::<Nanoword>() else {
        return;
    };
    let printed = word.to_string();
    let again: Nanoword = printed.parse().expect("printed words parse");
    assert_eq!(again, word);
    assert_eq!(again.to_string(), printed);
    assert_eq!(word.shift().shift_inv(), word);
});
