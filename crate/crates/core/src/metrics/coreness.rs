//! k-core decomposition by bucket peeling.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorenessProfile {
    pub coreness: Vec<usize>,
    pub max_core: usize,
}

impl CorenessProfile {
    /// Number of nodes in each core layer.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for &c in &self.coreness {
            *hist.entry(c).or_default() += 1;
        }
        hist
    }
}

/// Core numbers plus the order nodes were peeled in (a degeneracy order).
pub(crate) fn peel(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.node_count();
    let mut degree = g.degree_sequence();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // Nodes sorted by current degree; bin_start[d] is where degree d begins.
    let mut bin_start = vec![0usize; max_degree + 2];
    for &d in &degree {
        bin_start[d + 1] += 1;
    }
    for d in 1..bin_start.len() {
        bin_start[d] += bin_start[d - 1];
    }
    let mut order = vec![0usize; n];
    let mut pos = vec![0usize; n];
    let mut fill = bin_start.clone();
    for v in 0..n {
        pos[v] = fill[degree[v]];
        order[pos[v]] = v;
        fill[degree[v]] += 1;
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                // Swap u to the front of its bin, then shrink it into the bin below.
                let du = degree[u];
                let front = bin_start[du];
                let w = order[front];
                if w != u {
                    order.swap(pos[u], front);
                    pos[w] = pos[u];
                    pos[u] = front;
                }
                bin_start[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    (degree, order)
}

pub fn coreness(g: &Graph) -> CorenessProfile {
    let (coreness, _) = peel(g);
    let max_core = coreness.iter().copied().max().unwrap_or(0);
    CorenessProfile { coreness, max_core }
}
