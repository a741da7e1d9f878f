//! The explicit constructions behind the bounds: each candidate is checked
//! against the definition and compared with the exhaustive minimum.
//!
//! cargo run --example theorem_constructions

use antikekule::generators::{bridged_double_gadget, petersen, prism, t36};
use antikekule::{
    candidate_from_bridge, candidate_from_triangle, candidate_from_vertex, enumerate_smallest,
    is_anti_kekule, CandidateSet, Graph, SearchOptions,
};

fn show(name: &str, g: &Graph, c: &CandidateSet) {
    let ak = enumerate_smallest(g, &SearchOptions::unpruned())
        .unwrap()
        .ak;
    println!(
        "{name:<16} {:?} size {} anti-Kekulé: {:<5} ak = {ak}",
        c.provenance,
        c.edges.len(),
        is_anti_kekule(g, &c.edges).unwrap()
    );
}

fn main() {
    let g = petersen();
    show("petersen", &g, &candidate_from_vertex(&g, 0).unwrap());
    let g = prism(4);
    show("prism:4", &g, &candidate_from_vertex(&g, 0).unwrap());
    let g = bridged_double_gadget();
    show("bridged gadget", &g, &candidate_from_bridge(&g).unwrap());
    for n in 1..=3 {
        let g = t36(n);
        show(
            &format!("t36:{n}"),
            &g,
            &candidate_from_triangle(&g).unwrap(),
        );
    }
}
