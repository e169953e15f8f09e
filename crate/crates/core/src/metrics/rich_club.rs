use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RichClubProfile {
    /// Density of the subgraph induced by the `rho` highest-degree nodes,
    /// for `rho = 2..=N`.
    pub phi: BTreeMap<usize, f64>,
}

/// Nodes ranked by non-increasing degree, ties by ascending index.
pub(crate) fn degree_rank(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut rank = vec![0; order.len()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    rank
}

pub fn rich_club(g: &Graph) -> RichClubProfile {
    let n = g.node_count();
    let rank = degree_rank(g);
    // An edge belongs to the top-rho subgraph once rho exceeds the larger
    // rank of its endpoints.
    let mut entering = vec![0usize; n];
    for (u, v) in g.edges() {
        entering[rank[u].max(rank[v])] += 1;
    }
    let mut phi = BTreeMap::new();
    let mut inside = entering.first().copied().unwrap_or(0);
    for rho in 2..=n {
        inside += entering[rho - 1];
        let possible = (rho * (rho - 1) / 2) as f64;
        phi.insert(rho, inside as f64 / possible);
    }
    RichClubProfile { phi }
}
