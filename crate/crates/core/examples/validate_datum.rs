//! Validation reports for the shipped data: the reciprocity check passes
//! when the local normalizations balance and fails with a witness otherwise.

use arith_cs::cs::fixtures;

fn main() {
    for (name, datum) in [
        ("toy", fixtures::toy_datum()),
        ("balanced", fixtures::balanced_datum()),
        ("broken", fixtures::broken_datum()),
    ] {
        let report = datum.validate();
        println!(
            "{name}: {}",
            if report.passed() { "valid" } else { "invalid" }
        );
        for check in &report.checks {
            let mark = if check.passed { "ok  " } else { "FAIL" };
            print!("  {mark} {}: {}", check.name, check.detail);
            if let Some(w) = &check.witness {
                print!(" (witness {:?})", w.values());
            }
            println!();
        }
    }
}
