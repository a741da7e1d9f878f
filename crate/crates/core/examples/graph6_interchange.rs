//! Reading and writing graph6 and edge lists.
//!
//! cargo run --example graph6_interchange

use antikekule::generators::{petersen, random_cubic};
use antikekule::io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};

fn main() {
    let k4 = parse_graph6("C~").unwrap();
    println!(
        "C~ has {} vertices and {} edges",
        k4.vertex_count(),
        k4.edge_count()
    );

    let g = petersen();
    let text = emit_graph6(&g).unwrap();
    println!("petersen as graph6: {text}");
    println!("petersen as edge list:\n{}", emit_edgelist(&g));

    // Large graphs use the extended size header.
    let big = random_cubic(100, 7).unwrap();
    let encoded = emit_graph6(&big).unwrap();
    println!(
        "random cubic n=100: {}... ({} bytes)",
        &encoded[..16],
        encoded.len()
    );
    assert!(parse_graph6(&encoded).unwrap().same_structure(&big));
    assert!(parse_edgelist(&emit_edgelist(&big))
        .unwrap()
        .same_structure(&big));

    match parse_graph6("Bx") {
        Ok(_) => unreachable!(),
        Err(e) => println!("Bx is rejected: {e}"),
    }
}
