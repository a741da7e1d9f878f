//! Anti-Kekulé numbers of the named cubic families.
//!
//! cargo run --example ak_of_families

use antikekule::generators::{generate, Family, FamilySpec};
use antikekule::{enumerate_smallest, theorem_bounds, SearchOptions};

fn main() {
    let specs = [
        FamilySpec::new(Family::K4, &[]),
        FamilySpec::new(Family::K33, &[]),
        FamilySpec::new(Family::Cube, &[]),
        FamilySpec::new(Family::Petersen, &[]),
        FamilySpec::new(Family::Prism, &[5]),
        FamilySpec::new(Family::T36, &[2]),
        FamilySpec::new(Family::Tube46, &[1]),
        FamilySpec::new(Family::TorusHex, &[2, 3]),
        FamilySpec::new(Family::KleinHex, &[2, 2]),
        FamilySpec::new(Family::BridgedDoubleGadget, &[]),
    ];
    println!(
        "{:<22} {:>3} {:>3} {:>7} {:>3} {:>6}",
        "graph", "n", "m", "bounds", "ak", "sets"
    );
    for spec in specs {
        let g = generate(&spec).expect("valid spec");
        let b = theorem_bounds(&g).expect("cubic");
        let report = enumerate_smallest(&g, &SearchOptions::default()).expect("search");
        println!(
            "{:<22} {:>3} {:>3} {:>7} {:>3} {:>6}",
            spec.to_string(),
            g.vertex_count(),
            g.edge_count(),
            format!("{}..{}", b.lo, b.hi),
            report.ak,
            report.smallest_sets.len()
        );
    }
}
