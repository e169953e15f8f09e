//! Waxman random graphs with connectivity repair.
//!
//! Nodes are placed uniformly in a square. Random candidate pairs are
//! accepted with probability `alpha * exp(-d / (beta * L))`, where `L` is
//! the largest inter-node distance, until the target average degree is
//! reached. Components other than the giant one are then joined to it: a
//! component with a cycle hands over its least likely non-bridge edge, a
//! tree gains one new edge.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::Seed;
use crate::error::ConfigError;
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WaxmanConfig {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub plane_size: f64,
    /// Average degree the edge trials stop at (before repair).
    pub target_degree: f64,
}

impl WaxmanConfig {
    pub fn new(n: usize) -> Self {
        WaxmanConfig {
            n,
            alpha: 0.15,
            beta: 0.2,
            plane_size: 1.0,
            target_degree: 4.0,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n < 2 {
            return Err(ConfigError::invalid("waxman", format!("n={} must be at least 2", self.n)));
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) || !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(ConfigError::invalid(
                "waxman",
                format!("alpha={} and beta={} must lie in (0, 1]", self.alpha, self.beta),
            ));
        }
        if !(self.plane_size > 0.0) || !self.plane_size.is_finite() {
            return Err(ConfigError::invalid("waxman", "plane_size must be positive"));
        }
        if !(self.target_degree > 0.0) || !self.target_degree.is_finite() {
            return Err(ConfigError::invalid("waxman", "target_degree must be positive"));
        }
        Ok(())
    }

    fn target_edges(&self) -> usize {
        let max = self.n * (self.n - 1) / 2;
        ((self.target_degree * self.n as f64 / 2.0).round() as usize).clamp(1, max)
    }
}

/// Waxman link probability for a pair at distance `d` in a layout of
/// diameter `l`.
pub fn waxman_probability(alpha: f64, beta: f64, d: f64, l: f64) -> f64 {
    if l <= 0.0 {
        return alpha;
    }
    alpha * (-d / (beta * l)).exp()
}

struct Layout {
    points: Vec<(f64, f64)>,
    diameter: f64,
    alpha: f64,
    beta: f64,
}

impl Layout {
    fn probability(&self, u: usize, v: usize) -> f64 {
        let (a, b) = (self.points[u], self.points[v]);
        let d = (a.0 - b.0).hypot(a.1 - b.1);
        waxman_probability(self.alpha, self.beta, d, self.diameter)
    }
}

pub fn generate_waxman(cfg: &WaxmanConfig, seed: Seed) -> Result<Graph, ConfigError> {
    cfg.validate()?;
    let mut rng = seed.rng();
    let n = cfg.n;
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>() * cfg.plane_size, rng.gen::<f64>() * cfg.plane_size))
        .collect();
    let mut diameter: f64 = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let d = (points[i].0 - points[j].0).hypot(points[i].1 - points[j].1);
            diameter = diameter.max(d);
        }
    }
    let layout = Layout {
        points,
        diameter,
        alpha: cfg.alpha,
        beta: cfg.beta,
    };

    let mut g = GraphBuilder::with_nodes(n);
    let target = cfg.target_edges();
    // Bounded so a pathological kernel cannot spin forever; repair below
    // still guarantees a connected result.
    let max_trials = 1_000_u64 * target as u64 + 1_000_000;
    let mut trials = 0_u64;
    while g.edge_count() < target && trials < max_trials {
        trials += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) {
            continue;
        }
        if rng.gen::<f64>() < layout.probability(u, v) {
            g.add_edge(u, v);
        }
    }

    connect_components(&mut g, &layout, &mut rng);
    Ok(g.build())
}

fn connect_components<R: Rng>(g: &mut GraphBuilder, layout: &Layout, rng: &mut R) {
    loop {
        let parts = g.connected_components();
        if parts.count() <= 1 {
            return;
        }
        let members: Vec<usize> = (0..g.node_count())
            .filter(|&v| parts.component_id[v] == 1)
            .collect();
        let giant: Vec<usize> = (0..g.node_count())
            .filter(|&v| parts.component_id[v] == 0)
            .collect();

        let anchor = match least_likely_cycle_edge(g, &members, layout) {
            Some((u, v)) => {
                g.remove_edge(u, v);
                u
            }
            None => members[0],
        };
        let weights: Vec<f64> = giant.iter().map(|&w| layout.probability(anchor, w)).collect();
        let total: f64 = weights.iter().sum();
        let mut pick = *giant.last().expect("giant component is non-empty");
        if total > 0.0 {
            let mut rem = rng.gen::<f64>() * total;
            for (&w, &p) in giant.iter().zip(&weights) {
                rem -= p;
                if rem < 0.0 {
                    pick = w;
                    break;
                }
            }
        } else {
            pick = giant[rng.gen_range(0..giant.len())];
        }
        g.add_edge(anchor, pick);
    }
}

/// Lowest-probability edge inside `members` whose removal keeps the
/// component connected, if the component has a cycle.
fn least_likely_cycle_edge(
    g: &GraphBuilder,
    members: &[usize],
    layout: &Layout,
) -> Option<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = members
        .iter()
        .flat_map(|&u| g.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    if edges.len() < members.len() {
        return None;
    }
    edges.sort_by(|a, b| {
        layout
            .probability(a.0, a.1)
            .total_cmp(&layout.probability(b.0, b.1))
            .then(a.cmp(b))
    });
    edges
        .into_iter()
        .find(|&(u, v)| reachable_without(g, u, v, members.len()))
}

fn reachable_without(g: &GraphBuilder, u: usize, v: usize, component_size: usize) -> bool {
    let mut seen = std::collections::HashSet::with_capacity(component_size);
    let mut stack = vec![u];
    seen.insert(u);
    while let Some(x) = stack.pop() {
        for &y in g.neighbors(x) {
            if (x == u && y == v) || (x == v && y == u) {
                continue;
            }
            if y == v {
                return true;
            }
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_at_zero_distance_is_alpha() {
        assert_eq!(waxman_probability(0.15, 0.2, 0.0, 1.3), 0.15);
    }

    #[test]
    fn kernel_at_beta_l() {
        let (alpha, beta, l) = (0.4, 0.3, 2.0);
        let p = waxman_probability(alpha, beta, beta * l, l);
        assert!((p - alpha * (-1.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn kernel_strictly_decreasing() {
        let mut last = f64::INFINITY;
        for i in 0..100 {
            let p = waxman_probability(0.5, 0.5, i as f64 * 0.01, 1.0);
            assert!(p < last);
            last = p;
        }
    }

    #[test]
    fn connected_after_repair() {
        for seed in 0..3 {
            let g = generate_waxman(&WaxmanConfig::new(500), Seed(seed)).unwrap();
            assert_eq!(g.node_count(), 500);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn tiny_graph_saturates() {
        let g = generate_waxman(&WaxmanConfig::new(3), Seed(1)).unwrap();
        assert!(g.is_connected());
        assert!(g.edge_count() <= 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut cfg = WaxmanConfig::new(1);
        assert!(cfg.validate().is_err());
        cfg.n = 10;
        cfg.alpha = 0.0;
        assert!(cfg.validate().is_err());
        cfg.alpha = 0.5;
        cfg.beta = 1.5;
        assert!(cfg.validate().is_err());
    }
}
