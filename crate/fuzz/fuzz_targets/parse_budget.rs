#![no_main]

use libfuzzer_sys::fuzz_target;
use vstring::search::SearchBudget;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(budget) = text.parse::<SearchBudget>() {
        let again: SearchBudget = budget.to_string().parse().expect("printed budgets parse");
        assert_eq!(again, budget);
    }
});
