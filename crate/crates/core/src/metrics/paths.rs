use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::map_source_chunks;
use crate::error::MetricError;
use crate::graph::Graph;

/// Hop-count distribution over unordered reachable pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathStats {
    pub p_h: BTreeMap<usize, f64>,
    /// `sum_h h * P(h)`; zero when no pair is reachable.
    pub mean: f64,
    /// Largest finite distance.
    pub diameter: usize,
    pub reachable_pairs: u64,
    pub unreachable_pairs: u64,
}

/// Breadth-first distances from `source`; `usize::MAX` marks unreachable.
pub(crate) fn bfs_distances(g: &Graph, source: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) {
    dist.fill(usize::MAX);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u] + 1;
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
}

pub fn path_stats(g: &Graph) -> Result<PathStats, MetricError> {
    let n = g.node_count();
    if n < 2 {
        return Err(MetricError::TooFewNodes(2));
    }
    // Ordered-pair hop counts per chunk; every unordered pair is seen twice.
    let partials = map_source_chunks(n, |sources| {
        let mut counts: Vec<u64> = Vec::new();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for s in sources {
            bfs_distances(g, s, &mut dist, &mut queue);
            for &d in &dist {
                if d != usize::MAX && d > 0 {
                    if counts.len() <= d {
                        counts.resize(d + 1, 0);
                    }
                    counts[d] += 1;
                }
            }
        }
        counts
    });
    let mut counts: Vec<u64> = Vec::new();
    for part in partials {
        if counts.len() < part.len() {
            counts.resize(part.len(), 0);
        }
        for (h, c) in part.into_iter().enumerate() {
            counts[h] += c;
        }
    }

    let reachable: u64 = counts.iter().sum::<u64>() / 2;
    let total_pairs = (n as u64) * (n as u64 - 1) / 2;
    let mut p_h = BTreeMap::new();
    let mut weighted = 0u64;
    for (h, &c) in counts.iter().enumerate() {
        if c > 0 {
            let pairs = c / 2;
            p_h.insert(h, pairs as f64 / reachable as f64);
            weighted += h as u64 * pairs;
        }
    }
    Ok(PathStats {
        mean: if reachable == 0 { 0.0 } else { weighted as f64 / reachable as f64 },
        diameter: p_h.keys().next_back().copied().unwrap_or(0),
        p_h,
        reachable_pairs: reachable,
        unreachable_pairs: total_pairs - reachable,
    })
}
