//! The nine acceptance criteria, one pass/fail line each. Runs without the
//! libtest harness so the lines always reach the output.

use std::process::ExitCode;
use std::time::Instant;

use canring::checks;

fn main() -> ExitCode {
    let mut failed = 0;
    let mut outcomes = Vec::new();
    for (_, check) in checks::ALL {
        let start = Instant::now();
        let outcome = check();
        println!("{}  ({:.2?})", outcome.line(), start.elapsed());
        if !outcome.pass {
            failed += 1;
            println!("    expected: {}", outcome.expected);
            println!("    actual:   {}", outcome.actual);
        }
        outcomes.push(outcome);
    }
    let report = checks::report(&outcomes);
    let keys: Vec<&String> = report.as_object().expect("object").keys().collect();
    if keys != ["1", "2", "3", "4", "5", "6", "7", "8", "9"] {
        println!("[FAIL] report keys {keys:?}");
        return ExitCode::FAILURE;
    }
    println!("acceptance: {}/{} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
