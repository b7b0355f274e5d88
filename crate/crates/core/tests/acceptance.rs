//! Runs every acceptance criterion in order and prints one PASS/FAIL line
//! per criterion. Exits non-zero if any criterion fails.
//!
//! Pass criterion numbers as arguments to run a subset.

use std::process::ExitCode;
use std::time::Instant;

use absorder::verify::{self, CRITERIA};

fn main() -> ExitCode {
    let selected: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<u8> =
        CRITERIA.iter().map(|&(id, _)| id).filter(|id| selected.is_empty() || selected.contains(id)).collect();
    let mut failed = Vec::new();
    for id in ids {
        let start = Instant::now();
        match verify::run(id) {
            Ok(r) => {
                println!("{r} ({:.1}s)", start.elapsed().as_secs_f64());
                if !r.passed {
                    failed.push(id);
                }
            }
            Err(e) => {
                println!("FAIL [{id:>2}] error: {e}");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
