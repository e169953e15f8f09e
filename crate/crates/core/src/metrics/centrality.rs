//! Node betweenness (Brandes accumulation) and closeness.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::map_source_chunks;
use crate::error::MetricError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralityProfile {
    /// Sum over unordered pairs `{s, t}`, `s != v != t`, of
    /// `sigma_st(v) / sigma_st`. Not normalized.
    pub betweenness: Vec<f64>,
    pub avg_betweenness: f64,
    /// Reciprocal of the summed distance to every reachable node; `None`
    /// for isolated nodes.
    pub closeness: Vec<Option<f64>>,
}

struct Workspace {
    dist: Vec<usize>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
    queue: VecDeque<usize>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace {
            dist: vec![usize::MAX; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Single-source pass; adds dependencies into `acc` and returns the
    /// summed distance to reachable nodes.
    fn accumulate(&mut self, g: &Graph, s: usize, acc: &mut [f64]) -> usize {
        self.dist.fill(usize::MAX);
        self.sigma.fill(0.0);
        self.delta.fill(0.0);
        self.order.clear();
        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.queue.push_back(s);
        let mut total_distance = 0;
        while let Some(u) = self.queue.pop_front() {
            self.order.push(u);
            total_distance += self.dist[u];
            for &w in g.neighbors(u) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = self.dist[u] + 1;
                    self.queue.push_back(w);
                }
                if self.dist[w] == self.dist[u] + 1 {
                    self.sigma[w] += self.sigma[u];
                }
            }
        }
        for &w in self.order.iter().rev() {
            for &u in g.neighbors(w) {
                if self.dist[u] != usize::MAX && self.dist[u] + 1 == self.dist[w] {
                    self.delta[u] += self.sigma[u] / self.sigma[w] * (1.0 + self.delta[w]);
                }
            }
            if w != s {
                acc[w] += self.delta[w];
            }
        }
        total_distance
    }
}

pub fn centrality(g: &Graph) -> Result<CentralityProfile, MetricError> {
    let n = g.node_count();
    if n < 2 {
        return Err(MetricError::TooFewNodes(2));
    }
    let partials = map_source_chunks(n, |sources| {
        let mut ws = Workspace::new(n);
        let mut acc = vec![0.0; n];
        let distances: Vec<usize> = sources.map(|s| ws.accumulate(g, s, &mut acc)).collect();
        (acc, distances)
    });

    let mut betweenness = vec![0.0; n];
    let mut closeness = Vec::with_capacity(n);
    for (acc, distances) in partials {
        for (b, a) in betweenness.iter_mut().zip(acc) {
            *b += a;
        }
        closeness.extend(
            distances
                .into_iter()
                .map(|d| (d > 0).then(|| 1.0 / d as f64)),
        );
    }
    // Each unordered pair was counted from both ends.
    for b in &mut betweenness {
        *b /= 2.0;
    }
    let avg_betweenness = betweenness.iter().sum::<f64>() / n as f64;
    Ok(CentralityProfile {
        betweenness,
        avg_betweenness,
        closeness,
    })
}
