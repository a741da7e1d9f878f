use antikekule::generators::{self, corpus, random_gnp};
use antikekule::{Bipartition, EdgeSet, Graph, VertexSet};

// Union-find connectivity check, kept independent of the BFS in the library.
fn connected_without(g: &Graph, skip: Option<usize>) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        if Some(id) == skip {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

fn brute_force_bridges(g: &Graph) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| !connected_without(g, Some(e)))
        .collect()
}

// A graph is bipartite iff it has no odd closed walk; check all 2-colourings
// directly for tiny graphs.
fn brute_force_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        g.edges()
            .iter()
            .all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
    })
}

fn small_connected_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = corpus(14, 3).into_iter().map(|(_, g)| g).collect();
    for seed in 0..200u64 {
        let n = 2 + (seed as usize % 11);
        let g = random_gnp(n, 0.25 + (seed % 5) as f64 * 0.1, seed);
        if connected_without(&g, None) {
            out.push(g);
        }
    }
    out
}

#[test]
fn bridges_match_deletion_oracle() {
    for g in small_connected_graphs() {
        let found: Vec<usize> = g.bridges().iter().collect();
        assert_eq!(found, brute_force_bridges(&g), "{:?}", g.edges());
    }
}

#[test]
fn bipartition_matches_exhaustive_colouring() {
    for g in small_connected_graphs() {
        if g.vertex_count() > 14 {
            continue;
        }
        let parts = g.bipartition().unwrap();
        assert_eq!(parts.is_bipartite(), brute_force_bipartite(&g));
        match parts {
            Bipartition::TwoColoring { white, black } => {
                assert_eq!(white.len() + black.len(), g.vertex_count());
                for &(u, v) in g.edges() {
                    assert_ne!(white.contains(u), white.contains(v));
                }
            }
            Bipartition::OddCycle(cycle) => {
                assert!(cycle.len() % 2 == 1 && cycle.len() >= 3);
                for i in 0..cycle.len() {
                    let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                    assert!(g.edge_between(a, b).is_some(), "{a}-{b} not an edge");
                }
            }
        }
    }
}

#[test]
fn handshake_and_cubic_edge_count() {
    for (spec, g) in corpus(16, 2) {
        let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 2 * g.edge_count(), "{spec}");
        if g.is_cubic() {
            assert_eq!(2 * g.edge_count(), 3 * g.vertex_count(), "{spec}");
            assert_eq!(g.vertex_count() % 2, 0, "{spec}");
        }
    }
}

#[test]
fn cut_parity_in_cubic_graphs() {
    // In a cubic graph 3|X| = 2 e(X) + |boundary(X)|, so the boundary has the
    // parity of |X|.
    for g in [
        generators::petersen(),
        generators::t36(2),
        generators::cube(),
    ] {
        let n = g.vertex_count();
        for mask in 1u32..(1 << n.min(14)) {
            let x: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            assert_eq!(g.boundary(&x).len() % 2, x.len() % 2);
        }
    }
}

#[test]
fn components_partition_the_rest() {
    let g = generators::petersen();
    for mask in 0u32..(1 << 10) {
        let removed: VertexSet = (0..10).filter(|&v| mask >> v & 1 == 1).collect();
        let comps = g.components(&removed);
        let total: usize = comps.iter().map(|c| c.len()).sum();
        assert_eq!(total + removed.len(), 10);
        let odd = comps.iter().filter(|c| c.len() % 2 == 1).count();
        assert_eq!(odd, g.odd_component_count(&removed));
    }
}

#[test]
fn connectivity_after_edge_removal() {
    let g = generators::prism(4);
    for e in 0..g.edge_count() {
        let set = EdgeSet::new(vec![e]);
        assert_eq!(g.is_connected(&set), connected_without(&g, Some(e)));
        let h = g.without_edges(&set);
        assert_eq!(h.edge_count(), g.edge_count() - 1);
    }
}
