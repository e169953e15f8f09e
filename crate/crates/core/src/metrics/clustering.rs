use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusteringProfile {
    /// Mean local coefficient over nodes with degree >= 2.
    pub gamma: f64,
    /// Sum of local coefficients divided by N (nodes with degree < 2
    /// count as zero).
    pub gamma_literal: f64,
    /// Mean local coefficient per degree, for degrees >= 2.
    pub c_of_k: BTreeMap<usize, f64>,
}

/// `T_i / (k_i (k_i - 1) / 2)` per node; `None` where `k_i < 2`.
pub fn local_clustering(g: &Graph) -> Vec<Option<f64>> {
    let n = g.node_count();
    let mut mark = vec![false; n];
    (0..n)
        .map(|i| {
            let k = g.degree(i);
            if k < 2 {
                return None;
            }
            for &j in g.neighbors(i) {
                mark[j] = true;
            }
            // Each triangle through i is seen from both of its other corners.
            let mut twice = 0usize;
            for &j in g.neighbors(i) {
                twice += g.neighbors(j).iter().filter(|&&w| mark[w]).count();
            }
            for &j in g.neighbors(i) {
                mark[j] = false;
            }
            let triangles = (twice / 2) as f64;
            Some(triangles / (k * (k - 1) / 2) as f64)
        })
        .collect()
}

pub fn clustering(g: &Graph) -> ClusteringProfile {
    let local = local_clustering(g);
    let mut bins: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    let mut total = 0.0;
    let mut eligible = 0usize;
    for (v, c) in local.iter().enumerate() {
        if let Some(c) = *c {
            total += c;
            eligible += 1;
            let bin = bins.entry(g.degree(v)).or_insert((0.0, 0));
            bin.0 += c;
            bin.1 += 1;
        }
    }
    ClusteringProfile {
        gamma: if eligible == 0 { 0.0 } else { total / eligible as f64 },
        gamma_literal: total / g.node_count() as f64,
        c_of_k: bins
            .into_iter()
            .map(|(k, (sum, count))| (k, sum / count as f64))
            .collect(),
    }
}
