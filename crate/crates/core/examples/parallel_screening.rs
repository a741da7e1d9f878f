//! Splitting the subset screen across threads gives the same answer.
//!
//! cargo run --release --example parallel_screening

use std::time::Instant;

use antikekule::generators::tube46;
use antikekule::{enumerate_smallest, SearchOptions};

fn main() {
    let g = tube46(3);
    println!("tube46:3, n = {}, m = {}", g.vertex_count(), g.edge_count());
    let mut first = None;
    for jobs in [1, 2, 4, 8] {
        let options = SearchOptions {
            jobs,
            k_max: 4,
            ..SearchOptions::unpruned()
        };
        let started = Instant::now();
        let report = enumerate_smallest(&g, &options).unwrap();
        println!(
            "jobs {jobs}: ak = {}, {} sets, {} subsets in {:?}",
            report.ak,
            report.smallest_sets.len(),
            report.subsets_screened,
            started.elapsed()
        );
        let sets = first.get_or_insert_with(|| report.smallest_sets.clone());
        assert_eq!(*sets, report.smallest_sets);
    }
}
