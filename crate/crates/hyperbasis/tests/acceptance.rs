//! One line per acceptance criterion; exits non-zero if any criterion fails.

use std::process::ExitCode;

use hyperbasis::suites::{criterion, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in 1..=CRITERIA {
        let report = criterion(id);
        println!("{}", report.summary());
        for suite in &report.suites {
            for note in &suite.notes {
                println!("  note: {note}");
            }
        }
        if !report.passed() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {CRITERIA} criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
