//! Criteria 1–12. Prints one verdict line per criterion, with the individual
//! checks indented below it, and exits non-zero if any check fails.
//!
//! `cargo test --test acceptance -- 4 11` runs a subset.

use std::process::ExitCode;
use std::time::Instant;

use corelattice::verify::run_criterion;

fn main() -> ExitCode {
    let picked: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<u8> = if picked.is_empty() { (1..=12).collect() } else { picked };
    let mut failed = Vec::new();
    for id in ids {
        let start = Instant::now();
        let report = match run_criterion(id) {
            Ok(r) => r,
            Err(e) => {
                println!("criterion {id:>2} error: {e}");
                failed.push(id);
                continue;
            }
        };
        let secs = start.elapsed().as_secs_f64();
        println!("{report} [{secs:.1}s]");
        for c in &report.checks {
            println!("    [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        if !report.passed() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("\nacceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("\nacceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
