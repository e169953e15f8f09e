use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Degree distribution and average neighbor connectivity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeProfile {
    /// `P(k) = n(k) / N`.
    pub p_k: BTreeMap<usize, f64>,
    /// `2M / N`.
    pub avg_degree: f64,
    /// `k_nn(k) / (N - 1)`; degrees with no nodes (and degree 0) are absent.
    pub knn_norm: BTreeMap<usize, f64>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let n = g.node_count();
    let degrees = g.degree_sequence();

    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in &degrees {
        *counts.entry(d).or_default() += 1;
    }
    let p_k = counts
        .iter()
        .map(|(&k, &c)| (k, c as f64 / n as f64))
        .collect();

    let mut knn_norm = BTreeMap::new();
    if n > 1 {
        let mut sums: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
        for v in 0..n {
            let d = degrees[v];
            if d == 0 {
                continue;
            }
            let neighbor_sum: usize = g.neighbors(v).iter().map(|&w| degrees[w]).sum();
            let entry = sums.entry(d).or_insert((0.0, 0));
            entry.0 += neighbor_sum as f64 / d as f64;
            entry.1 += 1;
        }
        let scale = (n - 1) as f64;
        knn_norm = sums
            .into_iter()
            .map(|(k, (sum, count))| (k, sum / count as f64 / scale))
            .collect();
    }

    DegreeProfile {
        p_k,
        avg_degree: 2.0 * g.edge_count() as f64 / n as f64,
        knn_norm,
    }
}
