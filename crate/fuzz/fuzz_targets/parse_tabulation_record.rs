#![no_main]

use libfuzzer_sys::fuzz_target;
use vstring_cli::TabulationRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(record) = TabulationRecord::from_line(line) else {
        return;
    };
    let again = TabulationRecord::from_line(&record.to_line()).expect("serialized records parse");
    assert_eq!(again, record);
    // recomputation only on small words keeps each run fast
    if record.rank <= 6 {
        let _ = record.recheck();
    }
});
