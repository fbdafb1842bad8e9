//! The ten end-to-end acceptance criteria, one PASS/FAIL line each.
//!
//! Runs every criterion even when an earlier one fails, then exits non-zero if any failed.
//! `HYP3_SEED` overrides the default seed; positional arguments select criteria by number.

use std::process::ExitCode;

use hyp3::acceptance::{run_criterion, DEFAULT_SEED, TITLES};

fn main() -> ExitCode {
    let seed = std::env::var("HYP3_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    // The test runner forwards libtest flags such as `--nocapture`; only bare numbers select.
    let mut ids: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).filter(|n| (1..=10).contains(n)).collect();
    if ids.is_empty() {
        ids = (1..=10).collect();
    }

    println!("acceptance suite, seed {seed}");
    let mut failed = Vec::new();
    for id in ids {
        match run_criterion(id, seed) {
            Ok(r) => {
                println!("{}", r.line());
                if !r.pass() {
                    failed.push(id);
                }
            }
            Err(e) => {
                println!("criterion {id:>2} FAIL  {} — error: {e}", TITLES[id as usize - 1]);
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
