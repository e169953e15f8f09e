//! Generalized Linear Preference growth.
//!
//! Each step either adds a node with `m` links, or adds `m` links between
//! existing nodes. Endpoints are drawn with weight `k - beta_pref`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::sampler::WeightedSampler;
use super::Seed;
use crate::error::ConfigError;
use crate::graph::{Graph, GraphBuilder};

/// Defaults follow the AS-map fit published with the original model
/// (p = 0.4695 for link steps, beta = 0.6447); they are calibration inputs.
pub const GLP_DEFAULT_P_ADD: f64 = 1.0 - 0.4695;
pub const GLP_DEFAULT_BETA: f64 = 0.6447;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlpConfig {
    pub n: usize,
    pub m: usize,
    pub m0: usize,
    /// Probability that a step adds a new node rather than new links.
    pub p_add: f64,
    /// Preference shift; must stay below 1 so every weight is positive.
    pub beta_pref: f64,
}

impl GlpConfig {
    pub fn new(n: usize) -> Self {
        GlpConfig {
            n,
            m: 1,
            m0: 3,
            p_add: GLP_DEFAULT_P_ADD,
            beta_pref: GLP_DEFAULT_BETA,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(0.0..=1.0).contains(&self.p_add) {
            return Err(ConfigError::invalid("glp", format!("p_add={} outside [0, 1]", self.p_add)));
        }
        if !(self.beta_pref < 1.0) {
            return Err(ConfigError::invalid(
                "glp",
                format!("beta_pref={} must be below 1", self.beta_pref),
            ));
        }
        if self.m == 0 || self.m0 < 3 || self.m0 < self.m {
            return Err(ConfigError::invalid(
                "glp",
                format!("need m >= 1 and m0 >= max(3, m), got m={} m0={}", self.m, self.m0),
            ));
        }
        if self.n < self.m0 {
            return Err(ConfigError::invalid(
                "glp",
                format!("n={} is smaller than the seed ring m0={}", self.n, self.m0),
            ));
        }
        if self.p_add == 0.0 && self.n > self.m0 {
            return Err(ConfigError::invalid("glp", "p_add=0 never adds nodes"));
        }
        Ok(())
    }
}

pub fn generate_glp(cfg: &GlpConfig, seed: Seed) -> Result<Graph, ConfigError> {
    cfg.validate()?;
    let mut rng = seed.rng();
    let mut g = GraphBuilder::with_nodes(cfg.m0);
    g.add_ring(cfg.m0);

    let weight = |k: usize| k as f64 - cfg.beta_pref;
    let mut sampler = WeightedSampler::new();
    for v in 0..cfg.m0 {
        sampler.push(weight(g.degree(v)));
    }

    let mut targets = Vec::with_capacity(cfg.m);
    while g.node_count() < cfg.n {
        if rng.gen::<f64>() < cfg.p_add {
            targets.clear();
            while targets.len() < cfg.m {
                let t = sampler
                    .sample_where(&mut rng, |j| !targets.contains(&j))
                    .expect("m0 >= m guarantees enough targets");
                targets.push(t);
            }
            let v = g.add_node();
            for &t in &targets {
                g.add_edge(v, t);
                sampler.set(t, weight(g.degree(t)));
            }
            sampler.push(weight(cfg.m));
        } else {
            for _ in 0..cfg.m {
                let Some(u) = sampler.sample(&mut rng) else { break };
                let picked = sampler.sample_where(&mut rng, |v| v != u && !g.has_edge(u, v));
                // A saturated node (adjacent to everything) yields no link.
                if let Some(v) = picked {
                    g.add_edge(u, v);
                    sampler.set(u, weight(g.degree(u)));
                    sampler.set(v, weight(g.degree(v)));
                }
            }
        }
    }
    Ok(g.build())
}
