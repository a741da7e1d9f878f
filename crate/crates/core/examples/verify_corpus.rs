//! Runs every suite over a small corpus and prints a summary.
//!
//! cargo run --release --example verify_corpus [max_n] [seeds]

use antikekule::verify::{run_suite, Suite};

fn main() {
    let mut args = std::env::args().skip(1);
    let max_n = args.next().and_then(|a| a.parse().ok()).unwrap_or(14);
    let seeds = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let mut all_pass = true;
    for suite in Suite::ALL {
        let rows = run_suite(suite, max_n, seeds, 1);
        let passed = rows.iter().filter(|r| r.pass).count();
        println!("{suite:<16} {passed}/{} passed", rows.len());
        for row in rows.iter().filter(|r| !r.pass) {
            println!(
                "  counterexample {}: {} ({})",
                row.spec, row.graph6, row.check
            );
            all_pass = false;
        }
    }
    std::process::exit(if all_pass { 0 } else { 1 });
}
