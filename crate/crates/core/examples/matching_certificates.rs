//! Maximum matchings, with Tutte and Hall certificates when no perfect
//! matching exists.
//!
//! cargo run --example matching_certificates

use antikekule::generators::{cube, no_pm_gadget};
use antikekule::{
    enumerate_smallest, hall_witness, has_perfect_matching, maximum_matching, tutte_witness,
    SearchOptions,
};

fn main() {
    let g = no_pm_gadget();
    let m = maximum_matching(&g);
    println!(
        "gadget: n = {}, maximum matching has {} edges",
        g.vertex_count(),
        m.len()
    );
    let w = tutte_witness(&g).unwrap().expect("no perfect matching");
    println!(
        "  removing {:?} leaves {} odd components",
        w.removed.as_slice(),
        w.odd_components
    );
    assert!(w.holds_for(&g));

    // Removing a smallest anti-Kekulé set from the cube leaves a connected
    // bipartite graph; Hall's condition fails on one side.
    let cube = cube();
    let report = enumerate_smallest(&cube, &SearchOptions::default()).unwrap();
    let set = &report.smallest_sets[0];
    let h = cube.without_edges(set);
    assert!(!has_perfect_matching(&h));
    let parts = h.bipartition().unwrap();
    let hall = hall_witness(&h, &parts).unwrap().expect("Hall violation");
    println!(
        "cube minus {:?}: {:?} has only {} neighbours",
        set.as_slice(),
        hall.set.as_slice(),
        hall.neighborhood_size
    );
}
