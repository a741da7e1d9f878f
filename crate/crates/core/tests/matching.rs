use antikekule::generators::{self, corpus, random_cubic, random_gnp};
use antikekule::{
    brute_force_maximum_matching, enumerate_smallest, hall_witness, has_perfect_matching,
    maximum_matching, tutte_witness, Bipartition, EdgeSet, Graph, SearchOptions,
};

// Exhaustive oracle: largest pairwise-disjoint edge subset, by bitmask DP over
// vertices. Independent of both library implementations.
fn dp_matching_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    let full = (1u32 << n) - 1;
    let mut best = vec![0u8; 1 << n];
    // best[free] = maximum matching within the vertex set `free`.
    for free in 1..=full {
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut b = best[rest as usize];
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            b = b.max(1 + best[(rest & !(1 << w)) as usize]);
        }
        best[free as usize] = b;
    }
    best[full as usize] as usize
}

#[test]
fn blossom_agrees_with_exhaustive_on_1000_random_graphs() {
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize % 12);
        let p = 0.05 + 0.9 * ((seed / 12) % 10) as f64 / 9.0;
        let g = random_gnp(n, p, seed);
        let fast = maximum_matching(&g);
        assert!(fast.is_valid(&g));
        let slow = brute_force_maximum_matching(&g).unwrap();
        assert!(slow.is_valid(&g));
        let dp = dp_matching_size(&g);
        assert_eq!(fast.len(), dp, "seed {seed}: {:?}", g.edges());
        assert_eq!(slow.len(), dp, "seed {seed}");
    }
}

#[test]
fn blossom_agrees_on_corpus() {
    for (spec, g) in corpus(16, 3) {
        assert_eq!(maximum_matching(&g).len(), dp_matching_size(&g), "{spec}");
    }
}

#[test]
fn tutte_duality() {
    let mut graphs: Vec<Graph> = corpus(14, 3).into_iter().map(|(_, g)| g).collect();
    graphs.push(generators::no_pm_gadget());
    graphs.extend((0..300u64).map(|s| random_gnp(2 + s as usize % 11, 0.3, s)));
    let mut certified = 0;
    for g in graphs {
        let witness = tutte_witness(&g).unwrap();
        let perfect = 2 * dp_matching_size(&g) == g.vertex_count();
        assert_eq!(has_perfect_matching(&g), perfect);
        assert_eq!(witness.is_some(), !perfect, "{:?}", g.edges());
        if let Some(w) = witness {
            assert!(w.holds_for(&g));
            certified += 1;
        }
    }
    assert!(certified > 10);
}

#[test]
fn bridgeless_cubic_graphs_have_perfect_matchings() {
    for seed in 0..200u64 {
        let n = 4 + 2 * (seed as usize % 15);
        let g = random_cubic(n, seed).unwrap();
        if g.bridges().is_empty() {
            let m = maximum_matching(&g);
            assert!(m.is_perfect(&g), "n={n} seed={seed}");
        }
    }
}

// Removing a perfect matching from a cubic graph leaves a 2-factor; for a
// bipartite cubic graph that 2-factor splits again, so the edge set is a
// disjoint union of three perfect matchings.
#[test]
fn bipartite_cubic_graphs_factor_into_matchings() {
    for g in [
        generators::k33(),
        generators::cube(),
        generators::tube46(2),
        generators::torus_hex(3, 3),
    ] {
        let mut remaining = EdgeSet::empty();
        for _ in 0..3 {
            let h = g.without_edges(&remaining);
            let m = maximum_matching(&h);
            assert!(m.is_perfect(&h));
            let mut ids: Vec<usize> = remaining.iter().collect();
            for (u, v) in m.pairs(&h) {
                ids.push(g.edge_between(u, v).unwrap());
            }
            remaining = EdgeSet::new(ids);
        }
        assert_eq!(remaining.len(), g.edge_count());
    }
}

#[test]
fn hall_witness_after_removing_smallest_set() {
    let g = generators::cube();
    let report = enumerate_smallest(&g, &SearchOptions::default()).unwrap();
    assert_eq!(report.ak, 4);
    for set in &report.smallest_sets {
        let h = g.without_edges(set);
        let parts = h.bipartition().unwrap();
        assert!(matches!(parts, Bipartition::TwoColoring { .. }));
        let w = hall_witness(&h, &parts)
            .unwrap()
            .expect("no perfect matching");
        assert!(w.holds_for(&h, &parts));
    }
    let parts = g.bipartition().unwrap();
    assert!(hall_witness(&g, &parts).unwrap().is_none());
}
