//! Barabási–Albert growth with linear preferential attachment.

use serde::{Deserialize, Serialize};

use super::sampler::WeightedSampler;
use super::Seed;
use crate::error::ConfigError;
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaConfig {
    pub n: usize,
    /// Links added by each arriving node.
    pub m: usize,
    /// Size of the seed ring.
    pub m0: usize,
}

impl BaConfig {
    pub fn new(n: usize) -> Self {
        BaConfig { n, m: 2, m0: 3 }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.m == 0 {
            return Err(ConfigError::invalid("ba", "m must be at least 1"));
        }
        if self.m0 < 3 || self.m0 < self.m {
            return Err(ConfigError::invalid(
                "ba",
                format!("m0 must be at least max(3, m), got m0={} m={}", self.m0, self.m),
            ));
        }
        if self.n < self.m0 {
            return Err(ConfigError::invalid(
                "ba",
                format!("n={} is smaller than the seed ring m0={}", self.n, self.m0),
            ));
        }
        Ok(())
    }

    /// Edge count forced by construction: the ring plus `m` per arrival.
    pub fn expected_edges(&self) -> usize {
        self.m0 + self.m * (self.n - self.m0)
    }
}

pub fn generate_ba(cfg: &BaConfig, seed: Seed) -> Result<Graph, ConfigError> {
    cfg.validate()?;
    let mut rng = seed.rng();
    let mut g = GraphBuilder::with_nodes(cfg.m0);
    g.add_ring(cfg.m0);

    // Weight of node j is its degree, so a draw picks j with d_j / sum_k d_k.
    let mut sampler = WeightedSampler::new();
    for v in 0..cfg.m0 {
        sampler.push(g.degree(v) as f64);
    }

    let mut targets = Vec::with_capacity(cfg.m);
    while g.node_count() < cfg.n {
        targets.clear();
        while targets.len() < cfg.m {
            let t = sampler
                .sample_where(&mut rng, |j| !targets.contains(&j))
                .expect("seed ring guarantees positive weight");
            targets.push(t);
        }
        let v = g.add_node();
        for &t in &targets {
            g.add_edge(v, t);
            sampler.set(t, g.degree(t) as f64);
        }
        sampler.push(cfg.m as f64);
    }
    Ok(g.build())
}
