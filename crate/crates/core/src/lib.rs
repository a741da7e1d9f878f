//! Anti-Kekulé sets and the anti-Kekulé number of graphs.
//!
//! An edge set `S` of a connected graph `G` is *anti-Kekulé* when `G - S` is
//! connected and has no perfect matching (Kekulé structure). The anti-Kekulé
//! number `ak(G)` is the size of a smallest such set. For connected cubic
//! graphs `ak(G)` is at most 2 when `G` has a bridge, 3 or 4 otherwise, and
//! exactly 4 when `G` is bipartite, so every smallest set can be found by
//! screening subsets of at most four edges.
//!
//! ```
//! use antikekule::{enumerate_smallest, generators, SearchOptions};
//!
//! let g = generators::k33();
//! let report = enumerate_smallest(&g, &SearchOptions::default()).unwrap();
//! assert_eq!(report.ak, 4);
//! ```

pub mod cli;
pub mod combinations;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod report;
pub mod search;
pub mod verify;

pub use graph::{Bipartition, EdgeId, EdgeSet, Graph, GraphError, Vertex, VertexSet};
pub use matching::{
    brute_force_maximum_matching, hall_witness, has_perfect_matching, maximum_matching,
    tutte_witness, HallWitness, Matching, MatchingError, TutteWitness,
};
pub use report::ReportDocument;
pub use search::{
    candidate_from_bridge, candidate_from_triangle, candidate_from_two_edge_cut,
    candidate_from_vertex, enumerate_smallest, is_anti_kekule, theorem_bounds, AntiKekuleReport,
    Bounds, CandidateSet, Provenance, SearchError, SearchOptions,
};
