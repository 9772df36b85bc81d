//! Acceptance criteria 1-9, one status line each. Failing sub-checks are
//! listed under their criterion; the process exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use spinharm_core::verify::{run_criterion, VerifyOptions, CRITERIA};

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let start = Instant::now();
    let mut failed = Vec::new();
    println!("\nrunning acceptance criteria");
    for (id, _) in CRITERIA {
        let outcome = run_criterion(id, &opts);
        println!("{outcome}");
        for check in outcome.failed_checks() {
            println!("    failed: {} ({})", check.name, check.detail);
        }
        if !outcome.passed {
            failed.push(id);
        }
    }
    println!("acceptance: {} of {} criteria passed in {:.1?}", CRITERIA.len() - failed.len(), CRITERIA.len(), start.elapsed());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}\n");
        ExitCode::FAILURE
    }
}
