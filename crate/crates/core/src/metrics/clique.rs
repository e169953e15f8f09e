//! Exact maximum clique size.
//!
//! Nodes are visited in reverse degeneracy order. For each node `v` the
//! search runs over its later neighbours only (at most `degeneracy` of
//! them), held as bitsets, with a greedy-colouring upper bound in the
//! style of MCQ. A node whose core number cannot beat the incumbent is
//! skipped outright.

use std::time::{Duration, Instant};

use super::coreness::peel;
use crate::error::MetricError;
use crate::graph::Graph;

pub const DEFAULT_CLIQUE_BUDGET: Duration = Duration::from_secs(60);

/// Expansions between clock checks.
const CLOCK_INTERVAL: u64 = 1024;

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: usize,
    expansions: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    /// Greedy colouring of `cand`; returns vertices by ascending colour.
    fn colour(&self, cand: &Bits) -> Vec<(usize, usize)> {
        let mut uncoloured = cand.clone();
        let mut out = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut open = uncoloured.clone();
            while let Some(u) = open.first() {
                out.push((u, colour));
                uncoloured.clear(u);
                open.clear(u);
                open.and_not_assign(&self.adj[u]);
            }
        }
        out
    }

    fn expand(&mut self, mut cand: Bits, size: usize) {
        self.expansions += 1;
        if self.expansions.is_multiple_of(CLOCK_INTERVAL) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        if self.timed_out {
            return;
        }
        let coloured = self.colour(&cand);
        for &(u, colour) in coloured.iter().rev() {
            if size + colour <= self.best {
                return;
            }
            let next = cand.and(&self.adj[u]);
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(next, size + 1);
                if self.timed_out {
                    return;
                }
            }
            cand.clear(u);
        }
    }
}

/// Largest clique size. With a `budget`, gives up once it is spent and
/// reports the best size found so far as a lower bound.
pub fn top_clique_size(g: &Graph, budget: Option<Duration>) -> Result<usize, MetricError> {
    let n = g.node_count();
    if n == 0 {
        return Err(MetricError::TooFewNodes(1));
    }
    let deadline = budget.map(|b| Instant::now() + b);
    let (core, order) = peel(g);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut best = if g.edge_count() > 0 { 2 } else { 1 };
    let mut local_index = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        if core[v] < best {
            continue;
        }
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        if later.len() < best {
            continue;
        }
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(MetricError::Timeout { lower_bound: best });
        }
        for (i, &w) in later.iter().enumerate() {
            local_index[w] = i;
        }
        let adj: Vec<Bits> = later
            .iter()
            .map(|&w| {
                let mut bits = Bits::empty(later.len());
                for &x in g.neighbors(w) {
                    if local_index[x] != usize::MAX {
                        bits.set(local_index[x]);
                    }
                }
                bits
            })
            .collect();
        let mut cand = Bits::empty(later.len());
        for i in 0..later.len() {
            cand.set(i);
        }

        let mut search = Search {
            adj: &adj,
            best,
            expansions: 0,
            deadline,
            timed_out: false,
        };
        search.expand(cand, 1);
        best = search.best;
        for &w in &later {
            local_index[w] = usize::MAX;
        }
        if search.timed_out {
            return Err(MetricError::Timeout { lower_bound: best });
        }
    }
    Ok(best)
}
