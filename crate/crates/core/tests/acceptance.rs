//! Acceptance criteria 1-9, one PASS/FAIL line each.

use std::process::ExitCode;

use nilmetric::catalog::Catalog;
use nilmetric::report::criterion;

fn main() -> ExitCode {
    let cat = Catalog::builtin().expect("built-in catalog loads");
    let criteria: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=9u8).map(|n| {
            let cat = &cat;
            s.spawn(move || criterion(n, cat))
        }).collect();
        handles.into_iter().map(|h| h.join().expect("criterion thread")).collect()
    });
    let mut passed = 0;
    for c in &criteria {
        print!("{c}");
        passed += usize::from(c.pass());
    }
    println!("{passed}/9 criteria pass");
    if passed == 9 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
