//! Positive-Feedback Preference growth.
//!
//! Every step adds one node and grows the network interactively:
//!
//! * with probability `p_new`: the node joins one host, and the host gains
//!   links to two peers;
//! * with probability `q_new`: the node joins two hosts, and the first host
//!   gains a link to one peer;
//! * otherwise: the node joins one host, and the host gains one peer link.
//!
//! Hosts and peers are drawn with weight `k^(1 + delta * log10 k)`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::sampler::WeightedSampler;
use super::Seed;
use crate::error::ConfigError;
use crate::graph::{Graph, GraphBuilder};

/// Seed ring size; the smallest ring that is a simple graph.
pub const PFP_SEED_RING: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PfpConfig {
    pub n: usize,
    pub p_new: f64,
    pub q_new: f64,
    pub delta: f64,
}

impl PfpConfig {
    /// Defaults are the values published with the original model
    /// (p = 0.3, q = 0.1, delta = 0.048).
    pub fn new(n: usize) -> Self {
        PfpConfig {
            n,
            p_new: 0.3,
            q_new: 0.1,
            delta: 0.048,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let unit = 0.0..=1.0;
        if !unit.contains(&self.p_new)
            || !unit.contains(&self.q_new)
            || !(self.p_new + self.q_new <= 1.0)
        {
            return Err(ConfigError::invalid(
                "pfp",
                format!(
                    "need p_new, q_new in [0, 1] with p_new + q_new <= 1, got {} and {}",
                    self.p_new, self.q_new
                ),
            ));
        }
        if !(self.delta >= 0.0) || !self.delta.is_finite() {
            return Err(ConfigError::invalid("pfp", format!("delta={} must be >= 0", self.delta)));
        }
        if self.n < PFP_SEED_RING {
            return Err(ConfigError::invalid(
                "pfp",
                format!("n={} is smaller than the seed ring ({PFP_SEED_RING})", self.n),
            ));
        }
        Ok(())
    }
}

/// Attachment weight of a node with degree `k`.
pub fn pfp_kernel(k: usize, delta: f64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let k = k as f64;
    k.powf(1.0 + delta * k.log10())
}

pub fn generate_pfp(cfg: &PfpConfig, seed: Seed) -> Result<Graph, ConfigError> {
    cfg.validate()?;
    let mut rng = seed.rng();
    let mut g = GraphBuilder::with_nodes(PFP_SEED_RING);
    g.add_ring(PFP_SEED_RING);

    let mut sampler = WeightedSampler::new();
    for v in 0..PFP_SEED_RING {
        sampler.push(pfp_kernel(g.degree(v), cfg.delta));
    }

    while g.node_count() < cfg.n {
        let r = rng.gen::<f64>();
        let (host_count, peer_count) = if r < cfg.p_new {
            (1, 2)
        } else if r < cfg.p_new + cfg.q_new {
            (2, 1)
        } else {
            (1, 1)
        };

        let mut hosts: Vec<usize> = Vec::with_capacity(2);
        for _ in 0..host_count.min(sampler.len()) {
            if let Some(h) = sampler.sample_where(&mut rng, |j| !hosts.contains(&j)) {
                hosts.push(h);
            }
        }
        let v = g.add_node();
        for &h in &hosts {
            g.add_edge(v, h);
            sampler.set(h, pfp_kernel(g.degree(h), cfg.delta));
        }
        sampler.push(pfp_kernel(g.degree(v), cfg.delta));

        let host = hosts[0];
        for _ in 0..peer_count {
            let peer = sampler.sample_where(&mut rng, |j| j != host && !g.has_edge(host, j));
            if let Some(peer) = peer {
                g.add_edge(host, peer);
                sampler.set(host, pfp_kernel(g.degree(host), cfg.delta));
                sampler.set(peer, pfp_kernel(g.degree(peer), cfg.delta));
            }
        }
    }
    Ok(g.build())
}
