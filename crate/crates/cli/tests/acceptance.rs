//! The verification suite as a test target: one pass/fail line per
//! criterion, nonzero exit if any criterion fails.

use std::process::ExitCode;

use liftcount::golden::verify_paper;
use liftcount_core::EngineConfig;

fn main() -> ExitCode {
    let outcome = verify_paper(&EngineConfig::default());
    let mut failed = Vec::new();
    for l in &outcome.lines {
        let status = match (l.informational, l.passed) {
            (true, _) => "INFO",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        };
        println!("criterion {:>3}: {status}  {}: {}", l.id, l.title, l.detail);
        if !l.passed && !l.informational {
            failed.push(l.id.clone());
        }
    }
    let counted = outcome.lines.iter().filter(|l| !l.informational).count();
    if counted != 11 {
        println!("expected 11 criteria, found {counted}");
        return ExitCode::FAILURE;
    }
    if failed.is_empty() {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
