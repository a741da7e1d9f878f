//! Maximum matchings in general graphs and certificates for the absence of a
//! perfect matching.
//!
//! [`maximum_matching`] is Edmonds' blossom algorithm in its breadth-first
//! form with explicit base contraction, O(n³) overall. Vertices are tried as
//! augmentation roots in ascending order and neighbours are scanned in
//! ascending edge id, so results are reproducible.
//!
//! The exhaustive [`brute_force_maximum_matching`] exists only to cross-check
//! the blossom code on small graphs.

use std::collections::VecDeque;

use thiserror::Error;

use crate::combinations::Combinations;
use crate::graph::{Bipartition, EdgeId, EdgeSet, Graph, Vertex, VertexSet};

const NONE: usize = usize::MAX;

/// Largest edge count accepted by the exhaustive matching search. Covers every
/// simple graph on at most 12 vertices.
pub const BRUTE_FORCE_MAX_EDGES: usize = 66;
/// Largest vertex count accepted by the exhaustive Tutte-set search.
pub const TUTTE_MAX_VERTICES: usize = 16;
/// Largest colour class searched exhaustively for a Hall violator.
pub const HALL_MAX_CLASS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{what} search is limited to {limit}, got {actual}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("colouring is not a proper bipartition of this graph")]
    InvalidColoring,
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.len() == g.vertex_count()
    }

    /// Matched pairs `(u, v)` with `u < v`, in edge-id order.
    pub fn pairs(&self, g: &Graph) -> Vec<(Vertex, Vertex)> {
        self.edges.iter().map(|e| g.ordered_endpoints(e)).collect()
    }

    /// Recomputes disjointness from scratch.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.vertex_count()];
        for e in self.edges.iter() {
            if e >= g.edge_count() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        true
    }
}

/// `U` with more odd components in `G - U` than `|U|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteWitness {
    pub removed: VertexSet,
    pub odd_components: usize,
}

impl TutteWitness {
    pub fn holds_for(&self, g: &Graph) -> bool {
        let odd = g.odd_component_count(&self.removed);
        odd == self.odd_components && odd > self.removed.len()
    }
}

/// A subset of one colour class whose neighbourhood is strictly smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallWitness {
    pub set: VertexSet,
    pub neighborhood_size: usize,
}

impl HallWitness {
    pub fn holds_for(&self, g: &Graph, parts: &Bipartition) -> bool {
        let Bipartition::TwoColoring { white, black } = parts else {
            return false;
        };
        let one_side = self.set.iter().all(|v| white.contains(v))
            || self.set.iter().all(|v| black.contains(v));
        let nbhd = neighborhood(g, &self.set).len();
        one_side && nbhd == self.neighborhood_size && nbhd < self.set.len()
    }
}

fn neighborhood(g: &Graph, set: &VertexSet) -> VertexSet {
    set.iter().flat_map(|v| g.neighbors(v)).collect()
}

/// Reusable blossom-algorithm state. Edges flagged in the `removed` mask passed
/// to each call are treated as absent.
#[derive(Debug, Clone)]
pub(crate) struct BlossomSolver {
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    on_path: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSolver {
    pub(crate) fn new(n: usize) -> Self {
        BlossomSolver {
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            on_path: vec![false; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    pub(crate) fn clear(&mut self) {
        self.mate.fill(NONE);
    }

    pub(crate) fn set_pair(&mut self, u: Vertex, v: Vertex) {
        self.mate[u] = v;
        self.mate[v] = u;
    }

    /// Augments from every exposed vertex in ascending order.
    pub(crate) fn maximize(&mut self, g: &Graph, removed: &[bool]) {
        for v in 0..g.vertex_count() {
            if self.mate[v] == NONE {
                self.augment_from(g, removed, v);
            }
        }
    }

    /// True iff the current partial matching extends to a perfect one. Stops
    /// at the first exposed vertex with no augmenting path: such a vertex is
    /// left exposed by some maximum matching.
    pub(crate) fn completes_to_perfect(&mut self, g: &Graph, removed: &[bool]) -> bool {
        if g.vertex_count() % 2 == 1 {
            return false;
        }
        for v in 0..g.vertex_count() {
            if self.mate[v] == NONE && !self.augment_from(g, removed, v) {
                return false;
            }
        }
        true
    }

    pub(crate) fn matching(&self, g: &Graph) -> Matching {
        let edges = (0..g.vertex_count())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| {
                g.edge_between(v, self.mate[v])
                    .expect("matched vertices are adjacent")
            })
            .collect();
        Matching { edges }
    }

    /// One alternating-tree search from `root`; flips the path if one is found.
    fn augment_from(&mut self, g: &Graph, removed: &[bool], root: Vertex) -> bool {
        match self.find_path(g, removed, root) {
            Some(mut v) => {
                while v != NONE {
                    let pv = self.parent[v];
                    let next = self.mate[pv];
                    self.mate[v] = pv;
                    self.mate[pv] = v;
                    v = next;
                }
                true
            }
            None => false,
        }
    }

    fn find_path(&mut self, g: &Graph, removed: &[bool], root: Vertex) -> Option<Vertex> {
        let n = g.vertex_count();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, e) in g.incident(v) {
                if removed[e] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_is_outer =
                    to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_is_outer {
                    let b = self.common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, b, to);
                    self.mark_path(to, b, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = b;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.in_tree[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    // Lowest common base of v and w in the alternating forest.
    fn common_base(&mut self, mut v: Vertex, mut w: Vertex) -> Vertex {
        self.on_path.fill(false);
        loop {
            v = self.base[v];
            self.on_path[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        loop {
            w = self.base[w];
            if self.on_path[w] {
                return w;
            }
            w = self.parent[self.mate[w]];
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}

/// A maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut solver = BlossomSolver::new(g.vertex_count());
    let none_removed = vec![false; g.edge_count()];
    solver.maximize(g, &none_removed);
    solver.matching(g)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.vertex_count() % 2 == 1 {
        return false;
    }
    let mut solver = BlossomSolver::new(g.vertex_count());
    solver.completes_to_perfect(g, &vec![false; g.edge_count()])
}

/// Exhaustive include/exclude branching over edges in id order, with a
/// cardinality bound. Test oracle only.
pub fn brute_force_maximum_matching(g: &Graph) -> Result<Matching, MatchingError> {
    if g.edge_count() > BRUTE_FORCE_MAX_EDGES {
        return Err(MatchingError::TooLarge {
            what: "brute-force matching edge count",
            limit: BRUTE_FORCE_MAX_EDGES,
            actual: g.edge_count(),
        });
    }
    struct Search<'a> {
        g: &'a Graph,
        covered: Vec<bool>,
        current: Vec<EdgeId>,
        best: Vec<EdgeId>,
        free: usize,
    }
    impl Search<'_> {
        fn run(&mut self, next: EdgeId) {
            if self.current.len() > self.best.len() {
                self.best.clone_from(&self.current);
            }
            let remaining = self.g.edge_count() - next;
            let cap = self.current.len() + (self.free / 2).min(remaining);
            if next == self.g.edge_count() || cap <= self.best.len() {
                return;
            }
            let (u, v) = self.g.endpoints(next);
            if !self.covered[u] && !self.covered[v] {
                self.covered[u] = true;
                self.covered[v] = true;
                self.free -= 2;
                self.current.push(next);
                self.run(next + 1);
                self.current.pop();
                self.free += 2;
                self.covered[u] = false;
                self.covered[v] = false;
            }
            self.run(next + 1);
        }
    }
    let mut search = Search {
        g,
        covered: vec![false; g.vertex_count()],
        current: Vec::new(),
        best: Vec::new(),
        free: g.vertex_count(),
    };
    search.run(0);
    Ok(Matching {
        edges: EdgeSet::new(search.best),
    })
}

/// Smallest (by size, then lexicographically) vertex set violating Tutte's
/// condition, or `None` when a perfect matching exists.
pub fn tutte_witness(g: &Graph) -> Result<Option<TutteWitness>, MatchingError> {
    let n = g.vertex_count();
    if n > TUTTE_MAX_VERTICES {
        return Err(MatchingError::TooLarge {
            what: "Tutte witness vertex count",
            limit: TUTTE_MAX_VERTICES,
            actual: n,
        });
    }
    let mut counter = OddComponentCounter::new(n);
    for k in 0..=n {
        let mut subsets = Combinations::new(n, k);
        while let Some(u) = subsets.next_subset() {
            let odd = counter.count(g, u);
            if odd > k {
                return Ok(Some(TutteWitness {
                    removed: VertexSet::new(u.to_vec()),
                    odd_components: odd,
                }));
            }
        }
    }
    Ok(None)
}

struct OddComponentCounter {
    blocked: Vec<bool>,
    stack: Vec<Vertex>,
}

impl OddComponentCounter {
    fn new(n: usize) -> Self {
        OddComponentCounter {
            blocked: vec![false; n],
            stack: Vec::with_capacity(n),
        }
    }

    fn count(&mut self, g: &Graph, removed: &[Vertex]) -> usize {
        self.blocked.fill(false);
        for &v in removed {
            self.blocked[v] = true;
        }
        let mut odd = 0;
        for s in 0..g.vertex_count() {
            if self.blocked[s] {
                continue;
            }
            self.blocked[s] = true;
            self.stack.push(s);
            let mut size = 0;
            while let Some(v) = self.stack.pop() {
                size += 1;
                for w in g.neighbors(v) {
                    if !self.blocked[w] {
                        self.blocked[w] = true;
                        self.stack.push(w);
                    }
                }
            }
            odd += size % 2;
        }
        odd
    }
}

/// Hall violator for a bipartite graph, or `None` when a perfect matching
/// exists. Unequal colour classes yield the larger class as the witness.
pub fn hall_witness(g: &Graph, parts: &Bipartition) -> Result<Option<HallWitness>, MatchingError> {
    let Bipartition::TwoColoring { white, black } = parts else {
        return Err(MatchingError::NotBipartite);
    };
    let n = g.vertex_count();
    if white.len() + black.len() != n
        || white.iter().chain(black.iter()).any(|v| v >= n)
        || white.iter().any(|v| black.contains(v))
        || g.edges()
            .iter()
            .any(|&(u, v)| white.contains(u) == white.contains(v))
    {
        return Err(MatchingError::InvalidColoring);
    }
    let smaller = white.len().min(black.len());
    if smaller > HALL_MAX_CLASS {
        return Err(MatchingError::TooLarge {
            what: "Hall witness colour class",
            limit: HALL_MAX_CLASS,
            actual: smaller,
        });
    }
    if white.len() != black.len() {
        let larger = if white.len() > black.len() {
            white
        } else {
            black
        };
        return Ok(Some(HallWitness {
            neighborhood_size: neighborhood(g, larger).len(),
            set: larger.clone(),
        }));
    }
    let class = white.as_slice();
    let mut hit = vec![false; n];
    for k in 1..=class.len() {
        let mut subsets = Combinations::new(class.len(), k);
        while let Some(idx) = subsets.next_subset() {
            hit.fill(false);
            let mut reach = 0;
            for &i in idx {
                for w in g.neighbors(class[i]) {
                    if !hit[w] {
                        hit[w] = true;
                        reach += 1;
                    }
                }
            }
            if reach < k {
                return Ok(Some(HallWitness {
                    set: idx.iter().map(|&i| class[i]).collect(),
                    neighborhood_size: reach,
                }));
            }
        }
    }
    Ok(None)
}
