//! End-to-end acceptance checks, one line of output per criterion.
//!
//! Runs without the libtest harness so the lines always show up in
//! `cargo test` output. Exits nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use antikekule::generators::{self, corpus, random_cubic, random_gnp, FamilySpec};
use antikekule::io::{emit_graph6, parse_graph6};
use antikekule::search::anti_kekule_sets_of_size;
use antikekule::{
    brute_force_maximum_matching, candidate_from_bridge, candidate_from_triangle,
    enumerate_smallest, has_perfect_matching, is_anti_kekule, maximum_matching, tutte_witness,
    EdgeSet, Graph, SearchOptions,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ak_unpruned(g: &Graph) -> Result<usize, String> {
    enumerate_smallest(g, &SearchOptions::unpruned())
        .map(|r| r.ak)
        .map_err(|e| e.to_string())
}

fn expect_ak(label: &str, g: &Graph, want: usize) -> Result<(), String> {
    let got = ak_unpruned(g)?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: ak = {got}, expected {want}"))
    }
}

fn within(budget: Duration, started: Instant) -> Result<(), String> {
    let spent = started.elapsed();
    if spent <= budget {
        Ok(())
    } else {
        Err(format!("took {spent:?}, budget {budget:?}"))
    }
}

fn bridgeless_bounds() -> Outcome {
    let started = Instant::now();
    let mut random = 0;
    let mut total = 0;
    for (spec, g) in corpus(16, 5) {
        if !g.is_cubic() || !g.bridges().is_empty() {
            continue;
        }
        let ak = ak_unpruned(&g)?;
        if !(3..=4).contains(&ak) {
            return Err(format!("{spec}: ak = {ak}"));
        }
        total += 1;
        if spec.family.needs_seed() {
            random += 1;
        }
    }
    if random < 25 {
        return Err(format!("only {random} random bridgeless graphs"));
    }
    within(Duration::from_secs(600), started)?;
    Ok(format!(
        "{total} graphs ({random} random) in {:?}",
        started.elapsed()
    ))
}

fn bipartite_members() -> Vec<(&'static str, Graph)> {
    vec![
        ("k33", generators::k33()),
        ("cube", generators::cube()),
        ("tube46:0", generators::tube46(0)),
        ("tube46:1", generators::tube46(1)),
        ("tube46:2", generators::tube46(2)),
        ("torus_hex:2:2", generators::torus_hex(2, 2)),
        ("torus_hex:2:3", generators::torus_hex(2, 3)),
        ("torus_hex:3:3", generators::torus_hex(3, 3)),
        ("klein_hex:2:2", generators::klein_hex(2, 2)),
    ]
}

fn bipartite_four() -> Outcome {
    let started = Instant::now();
    for (label, g) in bipartite_members() {
        if !g.bipartition().map_err(|e| e.to_string())?.is_bipartite() {
            return Err(format!("{label} is not bipartite"));
        }
        expect_ak(label, &g, 4)?;
    }
    within(Duration::from_secs(900), started)?;
    Ok(format!("9 graphs in {:?}", started.elapsed()))
}

fn bridged_at_most_two() -> Outcome {
    let mut graphs = vec![(
        "bridged_double_gadget".to_string(),
        generators::bridged_double_gadget(),
    )];
    let mut variants = 0;
    for (spec, g) in corpus(20, 3) {
        if g.is_cubic() && !g.bridges().is_empty() && spec.family.needs_seed() {
            graphs.push((spec.to_string(), g));
            variants += 1;
        }
    }
    if variants < 5 {
        return Err(format!("only {variants} seeded bridged variants"));
    }
    for (label, g) in &graphs {
        let ak = ak_unpruned(g)?;
        if ak > 2 {
            return Err(format!("{label}: ak = {ak}"));
        }
        if ak >= 1 {
            let c = candidate_from_bridge(g).map_err(|e| format!("{label}: {e}"))?;
            if !is_anti_kekule(g, &c.edges).unwrap_or(false) {
                return Err(format!("{label}: bridge candidate is not anti-Kekulé"));
            }
        }
    }
    Ok(format!(
        "{} graphs ({variants} seeded variants)",
        graphs.len()
    ))
}

fn tubes_46() -> Outcome {
    for n in 0..=2 {
        expect_ak(&format!("tube46:{n}"), &generators::tube46(n), 4)?;
    }
    Ok("tube46(0..2)".into())
}

fn tubes_36() -> Outcome {
    for n in 1..=4 {
        let g = generators::t36(n);
        expect_ak(&format!("t36:{n}"), &g, 3)?;
        let c = candidate_from_triangle(&g).ok_or(format!("t36:{n}: no triangle"))?;
        if c.edges.len() != 3 || !is_anti_kekule(&g, &c.edges).unwrap_or(false) {
            return Err(format!("t36:{n}: triangle candidate fails"));
        }
    }
    Ok("t36(1..4) with triangle candidates".into())
}

fn lattices() -> Outcome {
    for (label, g) in bipartite_members() {
        if label.starts_with("torus") || label.starts_with("klein") {
            expect_ak(label, &g, 4)?;
        }
    }
    Ok("torus_hex and klein_hex instances".into())
}

fn k4_family() -> Outcome {
    let g = generators::k4();
    // Oracle: every one of the C(6,3) triples, screened directly.
    let mut oracle = Vec::new();
    for a in 0..6 {
        for b in (a + 1)..6 {
            for c in (b + 1)..6 {
                let set = EdgeSet::new(vec![a, b, c]);
                let h = g.without_edges(&set);
                let connected = h.is_connected(&EdgeSet::empty());
                if connected && brute_force_maximum_matching(&h).unwrap().len() < 2 {
                    oracle.push(set);
                }
            }
        }
    }
    let report = enumerate_smallest(&g, &SearchOptions::unpruned()).map_err(|e| e.to_string())?;
    let triangles = oracle.iter().all(|s| {
        let mut vs: Vec<usize> = s
            .iter()
            .flat_map(|e| [g.edges()[e].0, g.edges()[e].1])
            .collect();
        vs.sort();
        vs.dedup();
        vs.len() == 3
    });
    if anti_kekule_sets_of_size(&g, 2).is_empty()
        && report.ak == 3
        && report.smallest_sets == oracle
        && oracle.len() == 4
        && triangles
    {
        Ok("4 triangles".into())
    } else {
        Err(format!(
            "got ak {} with {:?}",
            report.ak, report.smallest_sets
        ))
    }
}

fn matching_oracle() -> Outcome {
    let mut checked = 0;
    let corpus_graphs = corpus(12, 5).into_iter().map(|(_, g)| g);
    let random = (0..1000u64).map(|seed| {
        let n = 1 + (seed as usize % 12);
        let p = 0.05 + 0.9 * ((seed / 12) % 10) as f64 / 9.0;
        random_gnp(n, p, seed)
    });
    for g in corpus_graphs.chain(random) {
        let fast = maximum_matching(&g);
        let slow = brute_force_maximum_matching(&g).map_err(|e| e.to_string())?;
        if fast.len() != slow.len() || !fast.is_valid(&g) {
            return Err(format!("mismatch on {:?}", emit_graph6(&g)));
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

fn tutte_duality() -> Outcome {
    let mut graphs: Vec<Graph> = corpus(14, 5).into_iter().map(|(_, g)| g).collect();
    graphs.extend((0..200u64).map(|s| random_gnp(2 + s as usize % 12, 0.3, s)));
    let mut witnesses = 0;
    for g in &graphs {
        let witness = tutte_witness(g).map_err(|e| e.to_string())?;
        if has_perfect_matching(g) == witness.is_some() {
            return Err(format!("duality fails on {:?}", emit_graph6(g)));
        }
        if let Some(w) = witness {
            if !w.holds_for(g) {
                return Err("witness does not certify".into());
            }
            witnesses += 1;
        }
    }
    Ok(format!("{} graphs, {witnesses} witnesses", graphs.len()))
}

fn binomial(m: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

fn scaling() -> Outcome {
    let g = generators::tube46(3);
    if g.vertex_count() != 26 || g.edge_count() != 39 {
        return Err("tube46:3 is not a 26-vertex cubic graph".into());
    }
    let started = Instant::now();
    let options = SearchOptions {
        k_max: 4,
        jobs: 1,
        ..SearchOptions::unpruned()
    };
    let report = enumerate_smallest(&g, &options).map_err(|e| e.to_string())?;
    let spent = started.elapsed();
    within(Duration::from_secs(300), started)?;
    let expected: u64 = (1..=4).map(|k| binomial(39, k)).sum();
    if report.ak != 4 || report.subsets_screened != expected {
        return Err(format!(
            "ak {} screened {}",
            report.ak, report.subsets_screened
        ));
    }
    let mut inputs: Vec<Graph> = corpus(16, 3).into_iter().map(|(_, g)| g).collect();
    inputs.push(random_cubic(26, 1).map_err(|e| e.to_string())?);
    for h in inputs.iter().filter(|h| h.is_cubic()) {
        let pruned = enumerate_smallest(h, &SearchOptions::default()).map_err(|e| e.to_string())?;
        let plain = enumerate_smallest(h, &SearchOptions::unpruned()).map_err(|e| e.to_string())?;
        if pruned.subsets_screened > plain.subsets_screened || pruned.ak != plain.ak {
            return Err(format!("pruning screened more on {:?}", emit_graph6(h)));
        }
    }
    Ok(format!("{expected} subsets on n = 26 in {spent:?}"))
}

fn graph6_round_trip() -> Outcome {
    let started = Instant::now();
    let graphs = corpus(40, 5);
    for (spec, g) in &graphs {
        let text = emit_graph6(g).map_err(|e| e.to_string())?;
        let back = parse_graph6(&text).map_err(|e| e.to_string())?;
        if !back.same_structure(g) || emit_graph6(&back).map_err(|e| e.to_string())? != text {
            return Err(format!("{spec} does not round-trip"));
        }
    }
    let k4 = parse_graph6("C~").map_err(|e| e.to_string())?;
    if !k4.same_structure(&generators::k4())
        || emit_graph6(&generators::k4()).ok().as_deref() != Some("C~")
    {
        return Err("C~ is not K4".into());
    }
    let golden = include_str!("golden/graph6.tsv");
    let mut rows = 0;
    for line in golden.lines().filter(|l| !l.starts_with('#')) {
        let (g6, rest) = line.split_once('\t').ok_or("bad golden row")?;
        let (n, edges) = rest.split_once('\t').unwrap_or((rest, ""));
        let pairs: Vec<(usize, usize)> = edges
            .split_whitespace()
            .filter_map(|p| p.split_once('-'))
            .map(|(u, v)| (u.parse().unwrap(), v.parse().unwrap()))
            .collect();
        let g = Graph::new(n.parse().unwrap(), &pairs).map_err(|e| e.to_string())?;
        if emit_graph6(&g).map_err(|e| e.to_string())? != g6 {
            return Err(format!("golden mismatch for {g6}"));
        }
        rows += 1;
    }
    within(Duration::from_secs(1), started)?;
    Ok(format!(
        "{} corpus graphs, {rows} golden rows",
        graphs.len()
    ))
}

fn determinism() -> Outcome {
    let picks: Vec<FamilySpec> = corpus(20, 2)
        .into_iter()
        .filter(|(_, g)| g.is_cubic())
        .map(|(s, _)| s)
        .step_by(3)
        .take(10)
        .collect();
    if picks.len() < 10 {
        return Err("corpus too small".into());
    }
    for spec in &picks {
        let g = generators::generate(spec).map_err(|e| e.to_string())?;
        let g6 = emit_graph6(&g).map_err(|e| e.to_string())?;
        let mut outputs = Vec::new();
        for jobs in ["1", "4", "1", "4"] {
            let out = Command::new(env!("CARGO_BIN_EXE_antikekule"))
                .args(["ak", "--g6", &g6, "--json", "--no-timing", "--jobs", jobs])
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("{spec}: exit {:?}", out.status.code()));
            }
            outputs.push(out.stdout);
        }
        if outputs.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!("{spec}: reports differ"));
        }
    }
    Ok(format!("{} graphs x 4 runs", picks.len()))
}

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "bridgeless cubic graphs have ak in {3,4}",
            bridgeless_bounds,
        ),
        ("bipartite cubic graphs have ak = 4", bipartite_four),
        ("bridged cubic graphs have ak <= 2", bridged_at_most_two),
        ("(4,6)-tubes have ak = 4", tubes_46),
        ("(3,6)-tubes have ak = 3", tubes_36),
        ("torus and Klein-bottle lattices have ak = 4", lattices),
        ("K4 has exactly the four triangles", k4_family),
        ("blossom matches exhaustive matching", matching_oracle),
        ("Tutte witness iff no perfect matching", tutte_duality),
        ("26-vertex k <= 4 screen and pruning savings", scaling),
        ("graph6 round-trip and golden files", graph6_round_trip),
        ("deterministic reports across job counts", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
