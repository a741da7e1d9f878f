//! External form of an [`AntiKekuleReport`]: sets are written as sorted
//! `[u, v]` endpoint pairs so documents stay valid across edge renumbering.

use serde::{Deserialize, Serialize};

use crate::graph::{EdgeSet, Graph};
use crate::search::AntiKekuleReport;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: usize,
    pub m: usize,
    pub cubic: bool,
    pub bipartite: bool,
    pub bridge_count: usize,
    pub ak: usize,
    pub sets: Vec<Vec<[usize; 2]>>,
    pub subsets_screened: u64,
    pub pruning_used: bool,
    pub elapsed_ms: u64,
}

/// Endpoint pairs of `set`, each with `u < v`, sorted.
pub fn endpoint_pairs(g: &Graph, set: &EdgeSet) -> Vec<[usize; 2]> {
    let mut pairs: Vec<_> = set
        .iter()
        .map(|e| {
            let (u, v) = g.ordered_endpoints(e);
            [u, v]
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

impl ReportDocument {
    pub fn new(g: &Graph, report: &AntiKekuleReport) -> Self {
        let mut sets: Vec<_> = report
            .smallest_sets
            .iter()
            .map(|s| endpoint_pairs(g, s))
            .collect();
        sets.sort();
        ReportDocument {
            n: g.vertex_count(),
            m: g.edge_count(),
            cubic: report.cubic,
            bipartite: g.bipartition().is_ok_and(|b| b.is_bipartite()),
            bridge_count: g.bridges().len(),
            ak: report.ak,
            sets,
            subsets_screened: report.subsets_screened,
            pruning_used: report.pruning_used,
            elapsed_ms: report.elapsed.as_millis() as u64,
        }
    }

    /// Copy with the timing field zeroed, for byte-level comparisons.
    pub fn normalized(&self) -> Self {
        ReportDocument {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
