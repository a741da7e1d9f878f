//! Immutable simple undirected graphs with stable edge identifiers.
//!
//! Vertices are dense `0..n` indices and edge `k` is the `k`-th pair handed
//! to [`Graph::new`]. Every structural query used by the matching and
//! screening code lives here: degrees, connectivity with removed edges,
//! components, bridges, edge boundaries and bipartition.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{index} ({u},{v}) is a self-loop")]
    SelfLoop { index: usize, u: Vertex, v: Vertex },
    #[error("edge #{index} ({u},{v}) duplicates edge #{first}")]
    DuplicateEdge {
        index: usize,
        first: EdgeId,
        u: Vertex,
        v: Vertex,
    },
    #[error("edge #{index} ({u},{v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange {
        index: usize,
        u: Vertex,
        v: Vertex,
        n: usize,
    },
    #[error("edge id {id} is not in 0..{m}")]
    EdgeOutOfRange { id: EdgeId, m: usize },
    #[error("vertex {vertex} is not in 0..{n}")]
    VertexIdOutOfRange { vertex: Vertex, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
}

/// Sorted, duplicate-free list of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

/// Sorted, duplicate-free list of edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new(mut ids: Vec<EdgeId>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        EdgeSet(ids)
    }

    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: EdgeId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSet::new(iter.into_iter().collect())
    }
}

/// Outcome of a two-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    TwoColoring {
        white: VertexSet,
        black: VertexSet,
    },
    /// Closed walk `c[0], c[1], ..., c[k-1]` of odd length `k`; `c[k-1]` is
    /// adjacent to `c[0]`.
    OddCycle(Vec<Vertex>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::TwoColoring { .. })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // (neighbour, edge id), ascending edge id per vertex
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a simple graph; edge ids follow the order of `pairs`.
    pub fn new(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<(Vertex, EdgeId)>> = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(u, v)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { index, u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { index, u, v });
            }
            if let Some(&(_, first)) = adj[u].iter().find(|&&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge { index, first, u, v });
            }
            adj[u].push((v, index));
            adj[v].push((u, index));
            edges.push((u, v));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of every edge, indexed by edge id, as given at construction.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// Endpoints with the smaller vertex first.
    pub fn ordered_endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        let (u, v) = self.edges[e];
        (u.min(v), u.max(v))
    }

    /// `(neighbour, edge id)` pairs of `v`, ascending by edge id.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// Rejects ids outside `0..m`.
    pub fn check_edge_set(&self, set: &EdgeSet) -> Result<(), GraphError> {
        match set.iter().find(|&id| id >= self.edges.len()) {
            Some(id) => Err(GraphError::EdgeOutOfRange {
                id,
                m: self.edges.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn check_vertex_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.iter().find(|&v| v >= self.n) {
            Some(vertex) => Err(GraphError::VertexIdOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Mask of length `m` with `true` at every id in `set`.
    pub fn edge_mask(&self, set: &EdgeSet) -> Vec<bool> {
        let m = self.edges.len();
        let mut mask = vec![false; m];
        for id in set.iter().filter(|&id| id < m) {
            mask[id] = true;
        }
        mask
    }

    /// `G - removed` as a new graph. Surviving edges keep their relative
    /// order, so ids are renumbered densely.
    pub fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let pairs: Vec<_> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !removed.contains(*id))
            .map(|(_, &p)| p)
            .collect();
        Graph::new(self.n, &pairs).expect("subgraph of a simple graph is simple")
    }

    /// Same vertex count and the same unordered edge set, ignoring edge ids.
    pub fn same_structure(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        let canon = |g: &Graph| {
            let mut es: Vec<_> = (0..g.edge_count())
                .map(|e| g.ordered_endpoints(e))
                .collect();
            es.sort_unstable();
            es
        };
        canon(self) == canon(other)
    }

    /// True iff `G - removed` has at most one component.
    pub fn is_connected(&self, removed: &EdgeSet) -> bool {
        let mask = self.edge_mask(removed);
        let mut seen = vec![false; self.n];
        let mut queue = Vec::with_capacity(self.n);
        self.is_connected_masked(&mask, &mut seen, &mut queue)
    }

    /// Breadth-first connectivity test skipping masked edges, with
    /// caller-owned scratch buffers.
    pub(crate) fn is_connected_masked(
        &self,
        removed: &[bool],
        seen: &mut [bool],
        queue: &mut Vec<Vertex>,
    ) -> bool {
        if self.n <= 1 {
            return true;
        }
        seen.fill(false);
        queue.clear();
        seen[0] = true;
        queue.push(0);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &(w, e) in &self.adj[v] {
                if !removed[e] && !seen[w] {
                    seen[w] = true;
                    queue.push(w);
                }
            }
        }
        queue.len() == self.n
    }

    /// Connected components of the subgraph induced on `V - removed`,
    /// ordered by smallest member.
    pub fn components(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut blocked = vec![false; self.n];
        for v in removed.iter().filter(|&v| v < self.n) {
            blocked[v] = true;
        }
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if blocked[s] {
                continue;
            }
            blocked[s] = true;
            queue.push_back(s);
            let mut members = vec![s];
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !blocked[w] {
                        blocked[w] = true;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comps.push(VertexSet::new(members));
        }
        comps
    }

    /// Number of odd-order components of `G - removed`.
    pub fn odd_component_count(&self, removed: &VertexSet) -> usize {
        self.components(removed)
            .iter()
            .filter(|c| c.len() % 2 == 1)
            .count()
    }

    /// Bridges by iterative depth-first search with low-link values.
    pub fn bridges(&self) -> EdgeSet {
        const UNSEEN: usize = usize::MAX;
        let mut order = vec![UNSEEN; self.n];
        let mut low = vec![0; self.n];
        let mut found = Vec::new();
        let mut clock = 0;
        // (vertex, edge used to enter it, next incident index)
        let mut stack: Vec<(Vertex, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..self.n {
            if order[root] != UNSEEN {
                continue;
            }
            order[root] = clock;
            low[root] = clock;
            clock += 1;
            stack.push((root, None, 0));
            while let Some(top) = stack.last_mut() {
                let (v, via, idx) = *top;
                if idx < self.adj[v].len() {
                    top.2 += 1;
                    let (w, e) = self.adj[v][idx];
                    if Some(e) == via {
                        continue;
                    }
                    if order[w] == UNSEEN {
                        order[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(order[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (via, stack.last()) {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > order[parent] {
                            found.push(e);
                        }
                    }
                }
            }
        }
        EdgeSet::new(found)
    }

    /// Edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: &VertexSet) -> EdgeSet {
        let mut inside = vec![false; self.n];
        for v in x.iter().filter(|&v| v < self.n) {
            inside[v] = true;
        }
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| inside[u] != inside[v])
            .map(|(id, _)| id)
            .collect()
    }

    /// Two-colouring by breadth-first search from vertex 0; on failure, an odd
    /// cycle through the first conflicting edge.
    pub fn bipartition(&self) -> Result<Bipartition, GraphError> {
        if !self.is_connected(&EdgeSet::empty()) {
            return Err(GraphError::Disconnected);
        }
        if self.n == 0 {
            return Ok(Bipartition::TwoColoring {
                white: VertexSet::empty(),
                black: VertexSet::empty(),
            });
        }
        let mut color = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut queue = VecDeque::from([0]);
        color[0] = 0;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return Ok(Bipartition::OddCycle(tree_cycle(v, w, &parent, &depth)));
                }
            }
        }
        let white = (0..self.n).filter(|&v| color[v] == 0).collect();
        let black = (0..self.n).filter(|&v| color[v] == 1).collect();
        Ok(Bipartition::TwoColoring { white, black })
    }
}

// Cycle formed by the tree paths from v and w to their common ancestor plus
// the edge vw.
fn tree_cycle(v: Vertex, w: Vertex, parent: &[usize], depth: &[usize]) -> Vec<Vertex> {
    let (mut a, mut b) = (v, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
