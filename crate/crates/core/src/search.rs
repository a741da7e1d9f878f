//! Anti-Kekulé sets: verification, the anti-Kekulé number, enumeration of
//! every smallest set, and the constructive candidates behind the cubic-graph
//! bounds.
//!
//! An edge set `S` of a connected graph `G` is anti-Kekulé when `G - S` is
//! connected and has no perfect matching; `ak(G)` is the size of a smallest
//! one. [`enumerate_smallest`] screens `k`-subsets of `E(G)` in lexicographic
//! order for increasing `k`, testing connectivity first and then perfect
//! matchability, and stops at the first `k` that yields any set.
//!
//! For connected cubic graphs the search range is bounded: with a bridge,
//! `ak <= 2`; without one, `3 <= ak <= 4`, and `ak = 4` when bipartite.

use std::thread;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::combinations::{binomial, Combinations};
use crate::graph::{EdgeId, EdgeSet, Graph, GraphError, Vertex};
use crate::matching::{has_perfect_matching, maximum_matching, BlossomSolver};

/// Default cap on `k` for unpruned searches.
pub const DEFAULT_K_MAX: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is not cubic; rerun without pruning")]
    NotCubic,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no anti-Kekulé set with at most {k_max} edges ({screened} subsets screened)")]
    Inconclusive { k_max: usize, screened: u64 },
    #[error(
        "no anti-Kekulé set within the bound k <= {k_hi}; the graph contradicts the cubic bounds"
    )]
    BoundsExhausted { k_hi: usize },
    #[error("graph has no bridge")]
    NoBridge,
    #[error("graph has bridges")]
    HasBridges,
    #[error("graph has no 2-edge cut")]
    NoTwoEdgeCut,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("vertex {vertex} has degree {degree}, need 3")]
    DegreeTooSmall { vertex: Vertex, degree: usize },
}

/// True iff `G - set` is connected and has no perfect matching.
pub fn is_anti_kekule(g: &Graph, set: &EdgeSet) -> Result<bool, SearchError> {
    g.check_edge_set(set)?;
    let mut screener = Screener::new(g, Vec::new());
    Ok(screener.test(set.as_slice()))
}

/// Inclusive range that must contain `ak(G)` for a connected cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub lo: usize,
    pub hi: usize,
}

pub fn theorem_bounds(g: &Graph) -> Result<Bounds, SearchError> {
    if !g.is_cubic() {
        return Err(SearchError::NotCubic);
    }
    if !g.bridges().is_empty() {
        return Ok(Bounds { lo: 0, hi: 2 });
    }
    let parts = g.bipartition().map_err(|_| SearchError::Disconnected)?;
    if parts.is_bipartite() {
        Ok(Bounds { lo: 4, hi: 4 })
    } else {
        Ok(Bounds { lo: 3, hi: 4 })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Restrict `k` to the cubic-graph bounds. Requires a cubic input.
    pub prune: bool,
    /// Largest subset size screened.
    pub k_max: usize,
    /// Worker threads per screening level.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: true,
            k_max: DEFAULT_K_MAX,
            jobs: 1,
        }
    }
}

impl SearchOptions {
    pub fn unpruned() -> Self {
        SearchOptions {
            prune: false,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiKekuleReport {
    pub ak: usize,
    /// Every anti-Kekulé set of size `ak`, lexicographically sorted.
    pub smallest_sets: Vec<EdgeSet>,
    pub subsets_screened: u64,
    pub pruning_used: bool,
    /// `false` flags a non-cubic input searched without bounds.
    pub cubic: bool,
    pub elapsed: Duration,
}

/// `ak(G)` with the complete family of smallest anti-Kekulé sets.
pub fn enumerate_smallest(
    g: &Graph,
    options: &SearchOptions,
) -> Result<AntiKekuleReport, SearchError> {
    let started = Instant::now();
    if !g.is_connected(&EdgeSet::empty()) {
        return Err(SearchError::Disconnected);
    }
    let cubic = g.is_cubic();
    if options.prune && !cubic {
        return Err(SearchError::NotCubic);
    }
    let base = maximum_matching(g);
    if !base.is_perfect(g) {
        return Ok(AntiKekuleReport {
            ak: 0,
            smallest_sets: vec![EdgeSet::empty()],
            subsets_screened: 0,
            pruning_used: options.prune,
            cubic,
            elapsed: started.elapsed(),
        });
    }
    let (k_lo, bound_hi) = if options.prune {
        let b = theorem_bounds(g)?;
        (b.lo.max(1), b.hi)
    } else {
        (1, usize::MAX)
    };
    let k_hi = bound_hi.min(options.k_max).min(g.edge_count());
    let pairs: Vec<_> = base
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            (u, v, e)
        })
        .collect();
    let mut screened = 0;
    for k in k_lo..=k_hi {
        let (found, count) = screen_level(g, k, options.jobs.max(1), &pairs);
        screened += count;
        if !found.is_empty() {
            return Ok(AntiKekuleReport {
                ak: k,
                smallest_sets: found,
                subsets_screened: screened,
                pruning_used: options.prune,
                cubic,
                elapsed: started.elapsed(),
            });
        }
    }
    if options.prune && options.k_max >= bound_hi {
        Err(SearchError::BoundsExhausted { k_hi: bound_hi })
    } else {
        Err(SearchError::Inconclusive {
            k_max: options.k_max,
            screened,
        })
    }
}

/// All anti-Kekulé sets of size exactly `k`, found by direct screening.
pub fn anti_kekule_sets_of_size(g: &Graph, k: usize) -> Vec<EdgeSet> {
    let base = maximum_matching(g);
    let pairs: Vec<_> = base
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = g.endpoints(e);
            (u, v, e)
        })
        .collect();
    screen_level(g, k, 1, &pairs).0
}

// Screens every k-subset, sliced into contiguous lexicographic ranges per
// worker. Results come back sorted regardless of the number of workers.
fn screen_level(
    g: &Graph,
    k: usize,
    jobs: usize,
    base: &[(Vertex, Vertex, EdgeId)],
) -> (Vec<EdgeSet>, u64) {
    let total = binomial(g.edge_count(), k);
    let jobs = (jobs as u64).clamp(1, total.max(1));
    let chunk = total.div_ceil(jobs);
    let run = |start: u64| {
        let mut screener = Screener::new(g, base.to_vec());
        let mut subsets = Combinations::slice(g.edge_count(), k, start, chunk);
        let mut found = Vec::new();
        while let Some(s) = subsets.next_subset() {
            if screener.test(s) {
                found.push(EdgeSet::new(s.to_vec()));
            }
        }
        found
    };
    let mut found: Vec<EdgeSet> = if jobs == 1 {
        run(0)
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let run = &run;
                    scope.spawn(move || run(j * chunk))
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("screening worker panicked"))
                .collect()
        })
    };
    found.sort();
    (found, total)
}

/// Per-worker state for testing subsets: removal mask, search buffers and a
/// perfect matching of `G` used to warm-start the blossom solver.
struct Screener<'g> {
    g: &'g Graph,
    base: Vec<(Vertex, Vertex, EdgeId)>,
    removed: Vec<bool>,
    seen: Vec<bool>,
    queue: Vec<Vertex>,
    solver: BlossomSolver,
}

impl<'g> Screener<'g> {
    fn new(g: &'g Graph, base: Vec<(Vertex, Vertex, EdgeId)>) -> Self {
        Screener {
            g,
            base,
            removed: vec![false; g.edge_count()],
            seen: vec![false; g.vertex_count()],
            queue: Vec::with_capacity(g.vertex_count()),
            solver: BlossomSolver::new(g.vertex_count()),
        }
    }

    fn test(&mut self, subset: &[EdgeId]) -> bool {
        for &e in subset {
            self.removed[e] = true;
        }
        let connected = self
            .g
            .is_connected_masked(&self.removed, &mut self.seen, &mut self.queue);
        let result = connected && !self.perfectly_matchable();
        for &e in subset {
            self.removed[e] = false;
        }
        result
    }

    fn perfectly_matchable(&mut self) -> bool {
        self.solver.clear();
        for &(u, v, e) in &self.base {
            if !self.removed[e] {
                self.solver.set_pair(u, v);
            }
        }
        self.solver.completes_to_perfect(self.g, &self.removed)
    }
}

/// Which proof construction produced a [`CandidateSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Edges at two neighbours `b, c` of `vertex`, other than `ab` and `ac`.
    Neighborhood { vertex: Vertex },
    /// The two other edges at a neighbour of a bridge end on the small side.
    BridgeNeighbor,
    /// Built from a triangle.
    Triangle,
    /// Built inside the smallest side of a 2-edge cut.
    CutAdjusted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub edges: EdgeSet,
    pub provenance: Provenance,
}

fn require_degree(g: &Graph, v: Vertex) -> Result<(), SearchError> {
    match g.degree(v) {
        d if d < 3 => Err(SearchError::DegreeTooSmall {
            vertex: v,
            degree: d,
        }),
        _ => Ok(()),
    }
}

fn edges_at_except<'g>(
    g: &'g Graph,
    v: Vertex,
    skip: &[Vertex],
) -> impl Iterator<Item = EdgeId> + 'g {
    let skip = skip.to_vec();
    g.incident(v)
        .iter()
        .filter(move |(w, _)| !skip.contains(w))
        .map(|&(_, e)| e)
}

/// `E_a`: the edges at the two lowest-id neighbours `b, c` of `a`, other than
/// `ab` and `ac`. Coincident edges are merged, so the set may have fewer than
/// four edges on small graphs.
pub fn candidate_from_vertex(g: &Graph, a: Vertex) -> Result<CandidateSet, SearchError> {
    if a >= g.vertex_count() {
        return Err(GraphError::VertexIdOutOfRange {
            vertex: a,
            n: g.vertex_count(),
        }
        .into());
    }
    require_degree(g, a)?;
    let mut nbrs: Vec<_> = g.neighbors(a).collect();
    nbrs.sort_unstable();
    let (b, c) = (nbrs[0], nbrs[1]);
    require_degree(g, b)?;
    require_degree(g, c)?;
    let edges = edges_at_except(g, b, &[a])
        .chain(edges_at_except(g, c, &[a]))
        .collect();
    Ok(CandidateSet {
        edges,
        provenance: Provenance::Neighborhood { vertex: a },
    })
}

/// Pick the bridge whose removal leaves the smallest side `G'`, let `u` be its
/// end in `G'` and `v` the lowest-id neighbour of `u` in `G'`; the candidate is
/// the two other edges at `v`.
pub fn candidate_from_bridge(g: &Graph) -> Result<CandidateSet, SearchError> {
    let bridges = g.bridges();
    if bridges.is_empty() {
        return Err(SearchError::NoBridge);
    }
    if !has_perfect_matching(g) {
        return Err(SearchError::NoPerfectMatching);
    }
    let n = g.vertex_count();
    let (_, _, u, across) = bridges
        .iter()
        .map(|e| {
            let (x, y) = g.ordered_endpoints(e);
            let x_side = side_size(g, &EdgeSet::new(vec![e]), x);
            let (small, u, across) = if 2 * x_side <= n {
                (x_side, x, y)
            } else {
                (n - x_side, y, x)
            };
            (small, e, u, across)
        })
        .min()
        .expect("at least one bridge");
    require_degree(g, u)?;
    let v = g
        .neighbors(u)
        .filter(|&w| w != across)
        .min()
        .expect("bridge end has a neighbour on its own side");
    require_degree(g, v)?;
    Ok(CandidateSet {
        edges: edges_at_except(g, v, &[u]).collect(),
        provenance: Provenance::BridgeNeighbor,
    })
}

fn side_size(g: &Graph, removed: &EdgeSet, from: Vertex) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut stack = vec![from];
    seen[from] = true;
    let mut size = 0;
    while let Some(v) = stack.pop() {
        size += 1;
        for &(w, e) in g.incident(v) {
            if !seen[w] && !removed.contains(e) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    size
}

/// Triangles `(a, b, c)` with `a < b < c`, lexicographic.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        let mut up: Vec<_> = g.neighbors(a).filter(|&w| w > a).collect();
        up.sort_unstable();
        for (i, &b) in up.iter().enumerate() {
            for &c in &up[i + 1..] {
                if g.edge_between(b, c).is_some() {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Size-3 candidate from a triangle. If two triangles share an edge, the edge
/// set of the first such triangle; otherwise, for the first triangle `abc`,
/// the edges leaving it at `a` and at `c` together with `ac`. `None` when the
/// graph is triangle-free.
pub fn candidate_from_triangle(g: &Graph) -> Option<CandidateSet> {
    let tris = triangles(g);
    let shares_edge = |t: &[Vertex; 3], o: &[Vertex; 3]| {
        t != o && t.iter().filter(|v| o.contains(v)).count() == 2
    };
    let edge = |u, v| g.edge_between(u, v).expect("triangle edge");
    if let Some(t) = tris.iter().find(|t| tris.iter().any(|o| shares_edge(t, o))) {
        let [a, b, c] = *t;
        return Some(CandidateSet {
            edges: EdgeSet::new(vec![edge(a, b), edge(b, c), edge(a, c)]),
            provenance: Provenance::Triangle,
        });
    }
    let [a, b, c] = *tris.first()?;
    let mut edges = vec![edge(a, c)];
    edges.extend(edges_at_except(g, a, &[b, c]).take(1));
    edges.extend(edges_at_except(g, c, &[a, b]).take(1));
    Some(CandidateSet {
        edges: EdgeSet::new(edges),
        provenance: Provenance::Triangle,
    })
}

/// Candidate for a bridgeless graph with a 2-edge cut.
///
/// Among all 2-edge cuts, take the one with the smallest side `G'` (ties by
/// lowest edge ids). With `e4` the lower-id cut edge and `v`, `u` the ends of
/// the cut edges in `G'`, let `s` be the lowest-id neighbour of `v` in `G'` and
/// `t` the lowest-id neighbour of `s` in `G'` other than `u` and `v`. The
/// candidate is the two edges at `t` other than `st`, the edge at `v` other
/// than `sv` and `e4`, and `e4` itself.
pub fn candidate_from_two_edge_cut(g: &Graph) -> Result<CandidateSet, SearchError> {
    if !g.bridges().is_empty() {
        return Err(SearchError::HasBridges);
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut best: Option<(usize, EdgeId, EdgeId, Vec<bool>)> = None;
    for e in 0..m {
        for f in (e + 1)..m {
            let cut = EdgeSet::new(vec![e, f]);
            if g.is_connected(&cut) {
                continue;
            }
            let (x, y) = g.endpoints(e);
            let mut side = vec![false; n];
            mark_side(g, &cut, x, &mut side);
            let size = side.iter().filter(|&&s| s).count();
            let (small, in_small) = if 2 * size <= n {
                (size, side)
            } else {
                let mut other = vec![false; n];
                mark_side(g, &cut, y, &mut other);
                (n - size, other)
            };
            if best.as_ref().is_none_or(|b| small < b.0) {
                best = Some((small, e, f, in_small));
            }
        }
    }
    let (_, e4, e5, inside) = best.ok_or(SearchError::NoTwoEdgeCut)?;
    let end_in = |e: EdgeId| {
        let (x, y) = g.endpoints(e);
        if inside[x] {
            x
        } else {
            y
        }
    };
    let v = end_in(e4);
    let u = end_in(e5);
    for w in [u, v] {
        require_degree(g, w)?;
    }
    let s = g
        .neighbors(v)
        .filter(|&w| inside[w] && g.edge_between(v, w) != Some(e4))
        .min()
        .ok_or(SearchError::NoTwoEdgeCut)?;
    require_degree(g, s)?;
    let t = g
        .neighbors(s)
        .filter(|&w| inside[w] && w != u && w != v)
        .min()
        .ok_or(SearchError::NoTwoEdgeCut)?;
    require_degree(g, t)?;
    let e3 = g
        .incident(v)
        .iter()
        .map(|&(_, e)| e)
        .find(|&e| e != e4 && Some(e) != g.edge_between(s, v))
        .expect("degree-3 vertex");
    let mut edges: Vec<_> = edges_at_except(g, t, &[s]).collect();
    edges.extend([e3, e4]);
    Ok(CandidateSet {
        edges: EdgeSet::new(edges),
        provenance: Provenance::CutAdjusted,
    })
}

fn mark_side(g: &Graph, removed: &EdgeSet, from: Vertex, side: &mut [bool]) {
    let mut stack = vec![from];
    side[from] = true;
    while let Some(v) = stack.pop() {
        for &(w, e) in g.incident(v) {
            if !side[w] && !removed.contains(e) {
                side[w] = true;
                stack.push(w);
            }
        }
    }
}
